#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "vatwist/cocycles/classify.hpp"
#include "vatwist/nctorus/torus.hpp"
#include "vatwist/reps/mackey.hpp"

namespace vatwist::cli {

using json = nlohmann::json;

/// Structurally invalid input (exit status 2), as opposed to a module error.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_from_json(const json& j);
json to_json(const Rational& q);
Integer integer_from_json(const json& j);

/// "p/q" or {"turns": "p/q", "alpha": "p/q"}.
CircleValue circle_from_json(const json& j);
json to_json(const CircleValue& c);
/// "p/q" or {"rat": "p/q", "alpha": "p/q"}.
QAlpha qalpha_from_json(const json& j);
json to_json(const QAlpha& q);

FinGroup fin_group_from_json(const json& j);
json to_json(const FinGroup& g);
VAGroup group_from_json(const json& j);
/// Explicit form: rank, point-group table, action and translation cocycle.
json to_json(const VAGroup& g);

GroupElement element_from_json(const json& j, const VAGroup& g);
json to_json(const GroupElement& g);

CocycleSpec cocycle_from_json(const json& j, std::size_t rank);
json to_json(const CocycleSpec& c);

/// {"rank": r, "entries": [[qalpha]]}, or {"rotation": qalpha}, or
/// {"block_diagonal": {"zeros": k, "block": theta}}.
ThetaMatrix theta_from_json(const json& j);
json to_json(const ThetaMatrix& t);

RationalCharacter character_from_json(const json& j, std::size_t rank);
json to_json(const RationalCharacter& chi);

json to_json(const Complex& z);
json to_json(const CMatrix& m);
json to_json(const IrrepRecord& rec, const VAGroup* owner, bool matrices);
json to_json(const ClassificationReport& r);
json to_json(const TorusReport& r);

}  // namespace vatwist::cli
