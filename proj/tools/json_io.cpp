#include "vatwist/cli/json_io.hpp"

#include <cmath>

#include "vatwist/error.hpp"
#include "vatwist/groups/catalog.hpp"

namespace vatwist::cli {
namespace {

double clean(double x) { return std::abs(x) < 1e-13 ? 0.0 : x; }

std::size_t size_of(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw MalformedInput(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const json& array_at(const json& j, const char* key) {
  const json& a = j.at(key);
  if (!a.is_array()) throw MalformedInput(std::string("\"") + key + "\" must be an array");
  return a;
}

IntMatrix int_matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw MalformedInput("matrix has the wrong number of rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw MalformedInput("matrix row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

ZVec zvec_from_json(const json& j, std::size_t r) {
  if (!j.is_array() || j.size() != r) throw MalformedInput("vector has the wrong length");
  ZVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw MalformedInput("vector entries must be integers");
    v.push_back(x.get<long>());
  }
  return v;
}

std::vector<CircleValue> circle_table(const json& j) {
  if (!j.is_array()) throw MalformedInput("table must be an array");
  std::vector<CircleValue> out;
  for (const auto& x : j) out.push_back(circle_from_json(x));
  return out;
}

json integer_or_null(const std::optional<Integer>& v) {
  if (!v) return nullptr;
  return to_long(*v);
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw MalformedInput("rationals are written as \"p/q\" strings");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
}

json to_json(const Rational& q) { return q.str(); }

Integer integer_from_json(const json& j) {
  Rational q = rational_from_json(j);
  if (!q.is_integer()) throw MalformedInput("expected an integer, got " + q.str());
  return q.num();
}

CircleValue circle_from_json(const json& j) {
  if (j.is_object()) {
    Rational a = j.contains("alpha") ? rational_from_json(j.at("alpha")) : Rational();
    return CircleValue(rational_from_json(j.at("turns")), a);
  }
  return CircleValue(rational_from_json(j));
}

json to_json(const CircleValue& c) { return {{"turns", c.turns().str()}, {"alpha", c.alpha_coeff().str()}}; }

QAlpha qalpha_from_json(const json& j) {
  if (j.is_object()) {
    Rational a = j.contains("alpha") ? rational_from_json(j.at("alpha")) : Rational();
    return QAlpha(rational_from_json(j.at("rat")), a);
  }
  return QAlpha(rational_from_json(j));
}

json to_json(const QAlpha& q) { return {{"rat", q.rat.str()}, {"alpha", q.alpha.str()}}; }

FinGroup fin_group_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("point group must be an object");
  if (j.contains("cyclic")) return FinGroup::cyclic(std::max<std::size_t>(1, size_of(j.at("cyclic"), "cyclic order")));
  if (j.contains("named")) {
    const auto name = j.at("named").get<std::string>();
    if (name == "trivial") return FinGroup::trivial();
    if (name == "heisenberg_mod2") return heisenberg_mod2();
    throw MalformedInput("unknown named group '" + name + "'");
  }
  if (j.contains("product")) {
    const json& p = array_at(j, "product");
    if (p.size() != 2) throw MalformedInput("product takes two factors");
    return FinGroup::direct_product(fin_group_from_json(p[0]), fin_group_from_json(p[1]));
  }
  if (j.contains("table")) {
    const json& rows = array_at(j, "table");
    const std::size_t n = rows.size();
    if (n > 20000) throw Error(ErrorKind::ResourceBound, "group table larger than 20000");
    std::vector<std::int32_t> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw MalformedInput("group table must be square");
      for (const auto& x : row) table.push_back(static_cast<std::int32_t>(size_of(x, "table entry")));
    }
    return FinGroup::from_table(n, std::move(table));
  }
  if (j.contains("permutations")) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : array_at(j, "permutations")) gens.push_back(g.get<std::vector<int>>());
    return FinGroup::from_permutations(gens, 5000);
  }
  throw MalformedInput("point group needs one of cyclic, named, product, table, permutations");
}

json to_json(const FinGroup& g) {
  json rows = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(static_cast<int>(a), static_cast<int>(b)));
    rows.push_back(std::move(row));
  }
  return {{"table", rows}};
}

VAGroup group_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("group must be an object");
  if (j.contains("preset")) {
    const auto name = j.at("preset").get<std::string>();
    const std::size_t r = j.contains("rank") ? size_of(j.at("rank"), "rank") : 2;
    if (name == "lattice") return VAGroup::lattice(r);
    if (name == "inversion") return catalog::inversion_semidirect(r);
    if (name == "quarter_turn") return catalog::quarter_turn_semidirect();
    if (name == "infinite_dihedral") return catalog::infinite_dihedral();
    throw MalformedInput("unknown group preset '" + name + "'");
  }
  const std::size_t r = size_of(j.at("rank"), "rank");
  FinGroup D = j.contains("point_group") ? fin_group_from_json(j.at("point_group")) : FinGroup::trivial();
  std::vector<IntMatrix> action;
  if (j.contains("action")) {
    const json& a = array_at(j, "action");
    if (a.size() != D.order()) throw MalformedInput("action needs one matrix per point-group element");
    for (const auto& m : a) action.push_back(int_matrix_from_json(m, r, r));
  } else {
    action.assign(D.order(), IntMatrix::identity(r));
  }
  std::vector<ZVec> delta;
  if (j.contains("delta")) {
    const json& d = array_at(j, "delta");
    if (d.size() != D.order() * D.order()) throw MalformedInput("delta needs |D|^2 vectors");
    for (const auto& v : d) delta.push_back(zvec_from_json(v, r));
  }
  return VAGroup(r, std::move(D), std::move(action), std::move(delta));
}

json to_json(const VAGroup& g) {
  const auto& D = g.point_group();
  json action = json::array(), delta = json::array();
  for (std::size_t d = 0; d < D.order(); ++d) {
    json m = json::array();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < g.rank(); ++k) row.push_back(to_long(g.action(static_cast<int>(d))(i, k)));
      m.push_back(std::move(row));
    }
    action.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < D.order(); ++a)
    for (std::size_t b = 0; b < D.order(); ++b) delta.push_back(g.delta(static_cast<int>(a), static_cast<int>(b)));
  return {{"rank", g.rank()}, {"point_group", to_json(D)}, {"action", action}, {"delta", delta}};
}

GroupElement element_from_json(const json& j, const VAGroup& g) {
  GroupElement e{zvec_from_json(j.at("vec"), g.rank()), static_cast<int>(size_of(j.at("pt"), "pt"))};
  g.check_element(e);
  return e;
}

json to_json(const GroupElement& g) { return {{"vec", g.vec}, {"pt", g.pt}}; }

CocycleSpec cocycle_from_json(const json& j, std::size_t rank) {
  if (!j.is_object()) throw MalformedInput("cocycle must be an object");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zero") return CocycleSpec::zero(j.contains("rank") ? size_of(j.at("rank"), "rank") : rank);
  if (kind == "bilinear") {
    const json& rows = array_at(j, "matrix");
    const std::size_t r = rows.size();
    QAlphaMatrix B(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      if (!rows[i].is_array() || rows[i].size() != r) throw MalformedInput("bilinear matrix must be square");
      for (std::size_t k = 0; k < r; ++k) B(i, k) = qalpha_from_json(rows[i][k]);
    }
    return CocycleSpec::bilinear(std::move(B));
  }
  if (kind == "theta") return sigma_theta(theta_from_json(j.at("theta")));
  if (kind == "rotation") return sigma_theta(ThetaMatrix::rotation(qalpha_from_json(j.at("theta"))));
  if (kind == "finite_table")
    return CocycleSpec::finite_table(size_of(j.at("point_order"), "point_order"), circle_table(j.at("table")));
  if (kind == "inflation")
    return CocycleSpec::inflation(static_cast<long>(size_of(j.at("modulus"), "modulus")),
                                  j.contains("rank") ? size_of(j.at("rank"), "rank") : rank,
                                  size_of(j.at("point_order"), "point_order"), circle_table(j.at("table")));
  if (kind == "sum") {
    std::vector<CocycleSpec> parts;
    for (const auto& p : array_at(j, "parts")) parts.push_back(cocycle_from_json(p, rank));
    return CocycleSpec::sum(std::move(parts));
  }
  throw MalformedInput("unknown cocycle kind '" + kind + "'");
}

json to_json(const CocycleSpec& c) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BilinearPart>) {
          json rows = json::array();
          for (std::size_t i = 0; i < p.B.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < p.B.cols(); ++k) row.push_back(to_json(p.B(i, k)));
            rows.push_back(std::move(row));
          }
          return {{"kind", "bilinear"}, {"matrix", rows}};
        } else if constexpr (std::is_same_v<T, FiniteTablePart>) {
          json t = json::array();
          for (const auto& v : p.table) t.push_back(to_json(v));
          return {{"kind", "finite_table"}, {"point_order", p.point_order}, {"table", t}};
        } else if constexpr (std::is_same_v<T, InflationPart>) {
          json t = json::array();
          for (const auto& v : p.table) t.push_back(to_json(v));
          return {{"kind", "inflation"}, {"modulus", p.modulus}, {"rank", p.rank}, {"point_order", p.point_order},
                  {"table", t}};
        } else {
          json parts = json::array();
          for (const auto& s : p.parts) parts.push_back(to_json(s));
          return {{"kind", "sum"}, {"parts", parts}};
        }
      },
      c.variant());
}

ThetaMatrix theta_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("theta must be an object");
  if (j.contains("rotation")) return ThetaMatrix::rotation(qalpha_from_json(j.at("rotation")));
  if (j.contains("block_diagonal")) {
    const json& b = j.at("block_diagonal");
    return ThetaMatrix::block_diagonal(size_of(b.at("zeros"), "zeros"), theta_from_json(b.at("block")));
  }
  const std::size_t r = size_of(j.at("rank"), "rank");
  const json& rows = array_at(j, "entries");
  if (rows.size() != r) throw MalformedInput("theta entries must be rank x rank");
  QAlphaMatrix M(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != r) throw MalformedInput("theta entries must be rank x rank");
    for (std::size_t k = 0; k < r; ++k) M(i, k) = qalpha_from_json(rows[i][k]);
  }
  return ThetaMatrix(std::move(M));
}

json to_json(const ThetaMatrix& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rank(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < t.rank(); ++k) row.push_back(to_json(t(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rank", t.rank()}, {"entries", rows}};
}

RationalCharacter character_from_json(const json& j, std::size_t rank) {
  if (!j.is_array()) throw MalformedInput("character must be an array of turns");
  std::vector<CircleValue> values;
  for (const auto& x : j) values.push_back(circle_from_json(x));
  if (values.size() != rank)
    throw Error(ErrorKind::RankMismatch, "character has " + std::to_string(values.size()) + " coordinates, lattice rank is " +
                                             std::to_string(rank));
  return RationalCharacter::from_circle(values);
}

json to_json(const RationalCharacter& chi) {
  json out = json::array();
  for (const auto& c : chi.coords) out.push_back(c.str());
  return out;
}

json to_json(const Complex& z) { return json::array({clean(z.real()), clean(z.imag())}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(Complex(m(i, k))));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const IrrepRecord& rec, const VAGroup* owner, bool matrices) {
  json chi = json::array();
  for (const auto& z : rec.character) chi.push_back(to_json(z));
  json out = {{"dim", rec.dim},
              {"multiplicity", rec.multiplicity},
              {"factor_modulus", rec.factor_modulus},
              {"lattice_character", rec.lattice_character ? to_json(*rec.lattice_character) : json(nullptr)},
              {"central_value", rec.central_value ? to_json(*rec.central_value) : json(nullptr)},
              {"character_norm", clean(rec.character_norm())},
              {"character", chi}};
  if (rec.rep && owner) {
    out["unitarity_residual"] = rec.rep->unitarity_residual();
    out["relation_residual"] = rec.rep->relation_residual(*owner);
    if (matrices) {
      json lat = json::array(), pt = json::array();
      for (const auto& m : rec.rep->lattice_images()) lat.push_back(to_json(m));
      for (const auto& m : rec.rep->point_images()) pt.push_back(to_json(m));
      out["matrices"] = {{"lattice", lat}, {"point", pt}};
    }
  } else if (rec.finite_rep && matrices) {
    json all = json::array();
    for (std::size_t g = 0; g < rec.finite_rep->group_order(); ++g)
      all.push_back(to_json(rec.finite_rep->image(static_cast<int>(g))));
    out["matrices"] = {{"elements", all}};
  }
  return out;
}

json to_json(const ClassificationReport& r) {
  json kron = json::array();
  for (const auto& row : r.kronecker) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(to_json(v));
    kron.push_back(std::move(jr));
  }
  json orders = json::array();
  for (const auto& o : r.finite_class_orders) orders.push_back(to_long(o));
  return {{"is_rational", r.is_rational},
          {"kronecker", kron},
          {"class_torsion_order", integer_or_null(r.class_torsion_order)},
          {"value_order_n", integer_or_null(r.value_order_n)},
          {"type_one_witness_m", integer_or_null(r.type_one_witness_m)},
          {"witness_index", integer_or_null(r.witness_index)},
          {"representative", to_json(r.representative)},
          {"representative_changed", r.representative_changed},
          {"finite_class_orders", orders}};
}

json to_json(const TorusReport& r) {
  return {{"rank", r.rank},
          {"rational_class", r.rational_class},
          {"degenerate", r.degenerate},
          {"degenerate_rank", r.degenerate_rank},
          {"d", r.d},
          {"simple_AT", r.simple_AT},
          {"dimnuc", {{"kind", to_string(r.dimnuc_kind)}, {"value", r.dimnuc_value}}},
          {"note", r.note}};
}

}  // namespace vatwist::cli
