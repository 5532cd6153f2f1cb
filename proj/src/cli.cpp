#include "qstrat/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "qstrat/classical.hpp"
#include "qstrat/errors.hpp"
#include "qstrat/io.hpp"
#include "qstrat/quillen.hpp"
#include "qstrat/steenrod.hpp"
#include "qstrat/strat.hpp"
#include "qstrat/toric.hpp"

namespace qstrat {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unfitted:
    case ErrorKind::BoundTooSmall:
      return 3;
    default:
      return 2;
  }
}

Json perm_json(const Perm& p) { return p.images(); }

Json object_json(const PairObject& o) {
  Json basis = Json::array();
  for (const auto& b : o.subgroup.basis()) basis.push_back(perm_json(b));
  return {{"rank", o.subgroup.rank()}, {"basis", basis}, {"component", o.component.vertices}};
}

Json fit_json(const std::optional<RationalFit>& fit) {
  if (!fit) return nullptr;
  return {{"numerator", fit->numerator},
          {"denominator_indices", fit->denominator_indices},
          {"factor_step", fit->factor_step}};
}

struct Setup {
  FiniteGroup group;
  std::optional<GSpace> space;
};

GSpace load_space(const JobSpec& spec) {
  if (spec.group.empty()) throw Error(ErrorKind::Validation, "--group is required");
  FiniteGroup group = parse_group(read_json_file(spec.group));
  GComplex complex = spec.space == "point"
                         ? GComplex::point(group.generators().size())
                         : parse_complex(read_json_file(spec.space), group.generators().size());
  if (spec.subdivide) complex = complex.barycentric_subdivision();
  return GSpace(std::move(group), std::move(complex));
}

std::size_t positive(const std::vector<std::string>& args, std::size_t i, const char* what) {
  if (args.size() <= i) throw Error(ErrorKind::Validation, std::string("missing ") + what);
  try {
    std::size_t pos = 0;
    long long v = std::stoll(args[i], &pos);
    if (pos != args[i].size() || v < 1) throw std::invalid_argument(what);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Validation, std::string("bad ") + what + ": " + args[i]);
  }
}

int cmd_elab(const JobSpec& spec, std::ostream& out) {
  if (spec.group.empty()) throw Error(ErrorKind::Validation, "--group is required");
  const FiniteGroup g = parse_group(read_json_file(spec.group));
  Json classes = Json::array();
  for (const auto& a : enumerate_elab(g, spec.ell)) {
    Json basis = Json::array();
    for (const auto& b : a.basis()) basis.push_back(perm_json(b));
    classes.push_back({{"rank", a.rank()},
                       {"basis", basis},
                       {"order", a.elements().size()},
                       {"weyl_order", weyl_group(g, a).order()}});
  }
  emit(out, {{"ell", spec.ell}, {"group_order", g.order()}, {"count", classes.size()},
             {"classes", classes}});
  return 0;
}

int cmd_limit(const JobSpec& spec, std::ostream& out, std::ostream& err, bool series_only) {
  const GSpace space = load_space(spec);
  const QuillenCategory cat = build_category(space, spec.ell);
  const LimitRing ring = limit_ring(cat, spec.degree, spec.reduced, spec.threads);
  const PoincareSeries ps = poincare(ring, spec.fit_max);
  Json j;
  if (series_only) {
    j["coefficients"] = ps.coefficients;
  } else {
    Json objects = Json::array();
    for (const auto& o : cat.objects) objects.push_back(object_json(o));
    j["objects"] = objects;
    j["dims"] = ring.dims();
  }
  j["fitted"] = fit_json(ps.fitted);
  j["pole_order"] = ps.fitted ? Json(ps.fitted->pole_order) : Json(nullptr);
  j["max_rank"] = cat.max_rank();
  j["reduced"] = spec.reduced;
  emit(out, j);
  if (series_only && !ps.fitted) {
    emit(err, {{"error", to_string(ErrorKind::Unfitted)},
               {"message", "no rational form with denominator degree <= " +
                               std::to_string(spec.fit_max) + " fits the computed range"}});
    return 3;
  }
  return 0;
}

int cmd_strata(const JobSpec& spec, std::ostream& out) {
  const GSpace space = load_space(spec);
  const QuillenCategory cat = build_category(space, spec.ell);
  const LimitRing ring = limit_ring(cat, spec.degree, true, spec.threads);
  const StratifiedSpectrum sp = stratify(cat, ring);
  Json arr = Json::array();
  for (std::size_t i = 0; i < sp.strata.size(); ++i) {
    const Stratum& s = sp.strata[i];
    arr.push_back({{"object", s.object},
                   {"dim", s.dim},
                   {"weyl_order", s.weyl.size()},
                   {"kernel_dims", s.kernel_dims()},
                   {"parents", sp.parents(i)},
                   {"degree_bound", sp.degree_bound}});
  }
  emit(out, arr);
  return 0;
}

int cmd_steenrod(const JobSpec& spec, std::ostream& out) {
  const GSpace space = load_space(spec);
  const QuillenCategory cat = build_category(space, spec.ell);
  const LimitRing ring = limit_ring(cat, spec.degree, true, spec.threads);
  Json arr = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const StabilityReport r = check_stratum_stability(ring, i);
    all = all && r.pass;
    arr.push_back({{"object", i}, {"checked", r.entries.size()}, {"pass", r.pass}});
  }
  emit(out, {{"degree_bound", spec.degree}, {"strata", arr}, {"pass", all}});
  return all ? 0 : 1;
}

int cmd_classical(const JobSpec& spec, std::ostream& out) {
  const auto& args = spec.arguments;
  if (args.empty()) throw Error(ErrorKind::Validation, "classical needs bgl, flag, reductive or frobenius");
  const std::string& what = args[0];
  if (what == "bgl") {
    const std::size_t n = positive(args, 1, "N");
    const GradedAlgebra alg = bgl_cohomology(n, spec.ell);
    std::vector<std::size_t> series;
    for (int d = 0; d <= spec.degree; ++d) series.push_back(alg.dim(d));
    std::vector<int> degrees;
    for (std::size_t i = 0; i < n; ++i) degrees.push_back(alg.poly_degree(i));
    emit(out, {{"N", n}, {"generator_degrees", degrees}, {"series", series}});
  } else if (what == "flag") {
    const std::size_t n = positive(args, 1, "N");
    const FlagAlgebra fl(n, spec.ell);
    Json dims = Json::array();
    for (const auto& [d, k] : fl.dims()) dims.push_back({{"degree", d}, {"dim", k}});
    emit(out, {{"N", n}, {"dims", dims}, {"total", fl.total_dim()}});
  } else if (what == "reductive") {
    const std::size_t n = positive(args, 1, "N");
    const ReductiveReport r = gl_reductive_check(n, spec.ell, spec.degree);
    emit(out, {{"N", n},
               {"ell", r.prime},
               {"degree_bound", r.degree_bound},
               {"image_dims", r.image_dims},
               {"invariant_dims", r.invariant_dims},
               {"injective", r.injective},
               {"image_invariant", r.image_invariant},
               {"frobenius_exponent", r.frobenius_exponent}});
    return r.injective && r.image_invariant ? 0 : 1;
  } else if (what == "frobenius") {
    const std::size_t l = positive(args, 1, "l");
    const FrobeniusReport r = gl_ell_diagonal_example(static_cast<std::uint32_t>(l));
    Json sigma = Json::array();
    for (const auto& img : r.images) {
      if (img.is_zero())
        sigma.push_back(0);
      else
        sigma.push_back(r.target.to_string(img));
    }
    emit(out, {{"sigma", sigma}});
    return r.matches ? 0 : 1;
  } else {
    throw Error(ErrorKind::Validation, "unknown classical subcommand " + what);
  }
  return 0;
}

int cmd_toric(const JobSpec& spec, std::ostream& out) {
  const auto& args = spec.arguments;
  if (args.size() < 2) throw Error(ErrorKind::Validation, "toric needs compare|pp|sr and a fan file");
  const Fan fan = parse_fan(read_json_file(args[1]));
  if (args[0] == "compare") {
    const ToricComparison c = compare(fan, spec.ell, spec.degree, spec.threads);
    emit(out, {{"smooth", c.smooth},
               {"degree_bound", c.degree_bound},
               {"pp", c.pp},
               {"limit", c.limit},
               {"sr", c.smooth ? Json(c.sr) : Json(nullptr)},
               {"pp_matches_limit", c.pp_matches_limit},
               {"sr_matches_pp", c.smooth ? Json(c.sr_matches_pp) : Json(nullptr)},
               {"faces_agree", c.faces_agree},
               {"pass", c.pass()}});
    return c.pass() ? 0 : 1;
  }
  if (args[0] == "pp") {
    const PiecewisePoly pp = piecewise_poly(fan, spec.ell, spec.degree, spec.threads);
    emit(out, {{"dims", pp.dims()}, {"pieces", pp.pieces}, {"faces_agree", pp.faces_agree(fan)}});
    return 0;
  }
  if (args[0] == "sr") {
    if (!fan.smooth()) throw Error(ErrorKind::Validation, "Stanley-Reisner comparison needs a smooth fan");
    const GradedAlgebra sr = stanley_reisner(fan, spec.ell);
    std::vector<std::size_t> dims;
    const int eps = spec.ell == 2 ? 1 : 2;
    for (int d = 0; d <= spec.degree; ++d) dims.push_back(sr.dim(eps * d));
    Json rels = Json::array();
    for (auto mask : sr.relations()) {
      std::vector<std::size_t> rays;
      for (std::size_t k = 0; k < 32; ++k)
        if (mask >> k & 1u) rays.push_back(k);
      rels.push_back(rays);
    }
    emit(out, {{"dims", dims}, {"minimal_nonfaces", rels}});
    return 0;
  }
  throw Error(ErrorKind::Validation, "unknown toric subcommand " + args[0]);
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    PrimeField check(spec.ell);  // validates l
    (void)check;
    if (spec.degree < 0) throw Error(ErrorKind::Validation, "--degree must be nonnegative");
    if (spec.threads == 0) throw Error(ErrorKind::Validation, "--threads must be positive");
    if (spec.command == "elab") return cmd_elab(spec, out);
    if (spec.command == "limit") return cmd_limit(spec, out, err, false);
    if (spec.command == "poincare") return cmd_limit(spec, out, err, true);
    if (spec.command == "strata") return cmd_strata(spec, out);
    if (spec.command == "steenrod-check") return cmd_steenrod(spec, out);
    if (spec.command == "classical") return cmd_classical(spec, out);
    if (spec.command == "toric") return cmd_toric(spec, out);
    throw Error(ErrorKind::Validation, "unknown command " + spec.command);
  } catch (const Error& e) {
    emit(err, {{"error", to_string(e.kind())}, {"message", e.what()}});
    return exit_code(e.kind());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quillen approximation of mod-l equivariant cohomology"};
  app.require_subcommand(1);
  JobSpec spec;

  auto common = [&](CLI::App* sub, bool space_flags) {
    sub->add_option("--ell", spec.ell, "prime l")->capture_default_str();
    sub->add_option("--degree", spec.degree, "degree bound D")->capture_default_str();
    sub->add_option("--threads", spec.threads, "worker threads")->capture_default_str();
    if (space_flags) {
      sub->add_option("--group", spec.group, "group JSON file")->required();
      sub->add_option("--space", spec.space, "complex JSON file or 'point'")->capture_default_str();
      sub->add_flag("--subdivide", spec.subdivide, "use the barycentric subdivision");
      sub->add_flag("--reduced", spec.reduced, "reduced even grading for l > 2");
      sub->add_option("--fit-max", spec.fit_max, "max denominator degree for the rational fit")
          ->capture_default_str();
    }
  };

  auto* elab = app.add_subcommand("elab", "conjugacy classes of elementary abelian subgroups");
  elab->add_option("--group", spec.group, "group JSON file")->required();
  elab->add_option("--ell", spec.ell, "prime l")->capture_default_str();
  for (const char* name : {"limit", "poincare", "strata", "steenrod-check"})
    common(app.add_subcommand(name), true);
  auto* classical = app.add_subcommand("classical", "bgl N | flag N | reductive N | frobenius L");
  common(classical, false);
  classical->add_option("args", spec.arguments)->expected(2)->required();
  auto* toric = app.add_subcommand("toric", "compare|pp|sr FAN");
  common(toric, false);
  toric->add_option("args", spec.arguments)->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(err, {{"error", "Validation"}, {"message", e.what()}});
    return 2;
  }
  spec.command = app.get_subcommands().front()->get_name();
  return run(spec, out, err);
}

}  // namespace qstrat
