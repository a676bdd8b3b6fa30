#include "vatwist/cli/jobs.hpp"

#include <array>
#include <utility>

#include "vatwist/error.hpp"
#include "vatwist/groups/extension.hpp"
#include "vatwist/reps/decompose.hpp"

namespace vatwist::cli {
namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::CocycleCheck, "cocycle-check"},
    {Command::CocycleClassify, "cocycle-classify"},
    {Command::GroupValidate, "group-validate"},
    {Command::ExtensionBuild, "extension-build"},
    {Command::Irreps, "irreps"},
    {Command::TwistedIrreps, "twisted-irreps"},
    {Command::TorusReport, "torus-report"},
}};

constexpr std::size_t kMaxEmittedGroupTable = 256;

VAGroup valid_group(const json& input) {
  VAGroup G = group_from_json(input.at("group"));
  const auto report = validate(G);
  if (!report.ok) throw Error(ErrorKind::InvalidGroup, report.violation);
  return G;
}

DecomposeOptions decompose_options(const JobOptions& opt) {
  DecomposeOptions d;
  d.seed = opt.seed;
  d.tol = opt.tol;
  return d;
}

void check_order(std::size_t order, const JobOptions& opt, const char* what) {
  if (order > opt.max_order || order > kMaxFiniteIrrepsOrder)
    throw Error(ErrorKind::ResourceBound, std::string(what) + " has " + std::to_string(order) +
                                              " elements, above the --max-order cap " + std::to_string(opt.max_order));
}

json records_json(const std::vector<IrrepRecord>& recs, const VAGroup* owner, const JobOptions& opt) {
  json out = json::array();
  for (const auto& r : recs) out.push_back(to_json(r, owner, opt.matrices));
  return out;
}

json cocycle_check(const json& in) {
  const VAGroup G = valid_group(in);
  const CocycleSpec sigma = cocycle_from_json(in.at("cocycle"), G.rank());
  const CocycleCheck c = check_cocycle_identity(sigma, G);
  json ce = json::array();
  for (const auto& g : c.counterexample) ce.push_back(to_json(g));
  return {{"ok", c.ok}, {"message", c.message}, {"counterexample", ce}};
}

json cocycle_classify(const json& in) {
  const VAGroup G = valid_group(in);
  const CocycleSpec sigma = cocycle_from_json(in.at("cocycle"), G.rank());
  json out = to_json(classify(sigma, G));
  const auto nuc = dimnuc_for_cocycle(sigma, G);
  out["dimnuc"] = nuc ? to_json(*nuc).at("dimnuc") : json(nullptr);
  return out;
}

json group_validate(const json& in) {
  const VAGroup G = group_from_json(in.at("group"));
  const auto report = validate(G);
  json out = {{"valid", report.ok},
              {"violation", report.violation},
              {"rank", G.rank()},
              {"point_group_order", G.point_group().order()}};
  if (report.ok) {
    out["hirsch_length"] = hirsch_length(G);
    out["centralizer_index"] = centralizer_of_lattice(G).index;
  }
  return out;
}

json extension_build(const json& in) {
  const VAGroup G = valid_group(in);
  const CocycleSpec sigma = cocycle_from_json(in.at("cocycle"), G.rank());
  const auto n = static_cast<long>(in.at("n").get<std::size_t>());
  const ExtensionResult ext = central_extension(G, sigma, n);
  const VAGroup& E = ext.extended();
  const GroupElement& a = ext.central_gen();
  bool central = is_central_element(E, a);
  std::size_t kernel = 0;
  for (std::size_t d = 0; d < E.point_group().order(); ++d)
    if (ext.project(E.point_lift(static_cast<int>(d))) == G.identity()) ++kernel;
  return {{"n", ext.order_n()},
          {"s", ext.scale_s()},
          {"point_group_order", E.point_group().order()},
          {"hirsch_length", hirsch_length(E)},
          {"valid", validate(E).ok},
          {"central_generator", to_json(a)},
          {"central_generator_is_central", central},
          {"kernel_order", kernel},
          {"extended_group", E.point_group().order() <= kMaxEmittedGroupTable ? to_json(E) : json(nullptr)}};
}

std::optional<CentralCharacter> central_from_json(const json& in, const VAGroup& G) {
  if (!in.contains("central")) return std::nullopt;
  const json& c = in.at("central");
  return CentralCharacter{element_from_json(c.at("element"), G), circle_from_json(c.at("omega"))};
}

json irreps(const json& in, const JobOptions& opt) {
  if (in.contains("finite_group")) {
    const FinGroup Q = fin_group_from_json(in.at("finite_group"));
    check_order(Q.order(), opt, "finite group");
    const auto recs = finite_irreps(Q, decompose_options(opt));
    std::size_t sum = 0;
    for (const auto& r : recs) sum += r.dim * r.dim;
    return {{"group_order", Q.order()}, {"sum_dim_squares", sum}, {"records", records_json(recs, nullptr, opt)}};
  }
  const VAGroup G = valid_group(in);
  IrrepsOptions io;
  io.decompose = decompose_options(opt);
  io.central = central_from_json(in, G);
  std::vector<RationalCharacter> chars;
  if (in.contains("character")) {
    chars.push_back(character_from_json(in.at("character"), G.rank()));
  } else {
    const auto q = static_cast<long>(in.at("modulus").get<std::size_t>());
    chars = orbit_cross_section(G, q);
  }
  json per = json::array();
  for (const auto& chi : chars) {
    const auto os = orbit_stabilizer(G, chi);
    check_order(static_cast<std::size_t>(chi.modulus()) * os.stabilizer.size(), opt, "little group");
    json orbit = json::array();
    for (const auto& o : os.orbit) orbit.push_back(to_json(o));
    per.push_back({{"character", to_json(chi)},
                   {"orbit", orbit},
                   {"stabilizer", os.stabilizer},
                   {"in_U", in_U(G, chi)},
                   {"records", records_json(irreps_over_character(G, chi, io), &G, opt)}});
  }
  return {{"characters", per}};
}

json twisted(const json& in, const JobOptions& opt) {
  const VAGroup G = valid_group(in);
  const CocycleSpec sigma = cocycle_from_json(in.at("cocycle"), G.rank());
  const RationalCharacter chi = character_from_json(in.at("character"), G.rank());
  IrrepsOptions io;
  io.decompose = decompose_options(opt);
  const TwistedIrreps tw = twisted_irreps(G, sigma, chi, io);
  const VAGroup* owner = tw.extended ? &*tw.extended : &G;
  return {{"n", tw.n},
          {"s", tw.s},
          {"character", to_json(chi)},
          {"lifted_character", to_json(tw.lifted)},
          {"extended_point_group_order", owner->point_group().order()},
          {"records", records_json(tw.records, owner, opt)}};
}

json torus(const json& in) { return to_json(dimnuc(theta_from_json(in.at("theta")))); }

json provenance(Command c, const JobOptions& opt) {
  return {{"command", command_name(c)},
          {"version", kVersion},
          {"seed", opt.seed},
          {"tol", opt.tol},
          {"max_order", opt.max_order}};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "unknown";
}

JobResult run_job(Command command, const json& input, const JobOptions& options) {
  JobResult out;
  json body;
  try {
    if (!input.is_object()) throw MalformedInput("input must be a JSON object");
    switch (command) {
      case Command::CocycleCheck: body = cocycle_check(input); break;
      case Command::CocycleClassify: body = cocycle_classify(input); break;
      case Command::GroupValidate: body = group_validate(input); break;
      case Command::ExtensionBuild: body = extension_build(input); break;
      case Command::Irreps: body = irreps(input, options); break;
      case Command::TwistedIrreps: body = twisted(input, options); break;
      case Command::TorusReport: body = torus(input); break;
    }
  } catch (const Error& e) {
    out.exit_code = 1;
    body = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
  } catch (const MalformedInput& e) {
    out.exit_code = 2;
    body = {{"error", {{"kind", "MalformedInput"}, {"message", e.what()}}}};
  } catch (const json::exception& e) {
    out.exit_code = 2;
    body = {{"error", {{"kind", "MalformedInput"}, {"message", e.what()}}}};
  }
  out.report = {{"provenance", provenance(command, options)}};
  out.report.update(body);
  return out;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace vatwist::cli
