#include "linmatch/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "linmatch/group_matching.hpp"
#include "linmatch/lmp.hpp"
#include "linmatch/prime_degree.hpp"

namespace linmatch::cli {

namespace {

int exit_code_for(errc c) {
  switch (c) {
    case errc::bound_exceeded:
    case errc::too_large:
    case errc::search_exhausted:
      return 3;
    case errc::internal:
      return 4;
    default:
      return 2;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? s.size() - start : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const std::string& tok : split(text, ',')) {
    try {
      dims.push_back(static_cast<std::size_t>(std::stoull(tok)));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "cannot parse dimension list '" + text + "'");
    }
  }
  return dims;
}

/// Group sets: ';' separates elements, ',' separates coordinates inside a
/// product-group tuple. For rank-1 groups both separators list elements, so
/// "0,2" and "0;2" both denote {0, 2} in Z_n.
std::vector<GroupElem> parse_group_set(const GroupSpec& spec, const std::string& text) {
  std::vector<GroupElem> elems;
  auto parse_int = [&](const std::string& tok) {
    try {
      return std::stoll(tok);
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "cannot parse group element '" + tok + "'");
    }
  };
  for (const std::string& chunk : split(text, ';')) {
    std::vector<std::string> coords = split(chunk, ',');
    if (spec.rank() == 1) {
      for (const std::string& tok : coords) elems.push_back(GroupElem{parse_int(tok)});
    } else {
      require(coords.size() == spec.rank(), errc::invalid_argument,
              "element '" + chunk + "' does not match the group rank");
      GroupElem e;
      for (const std::string& tok : coords) e.push_back(parse_int(tok));
      elems.push_back(std::move(e));
    }
  }
  return elems;
}

/// Element lists for subspaces and bases: ';' separates vectors, each vector
/// is coordinates in the polynomial text format (short vectors are padded
/// with zeros).
template <FieldDomain F>
std::vector<Element<F>> parse_vectors(const std::shared_ptr<const Extension<F>>& ctx,
                                      const std::string& text) {
  std::vector<Element<F>> out;
  for (const std::string& chunk : split(text, ';')) {
    Poly<typename F::Scalar> p = parse_poly(ctx->base(), chunk);
    require(p.degree() < static_cast<int>(ctx->degree()), errc::invalid_argument,
            "vector '" + chunk + "' has too many coordinates");
    Vec<typename F::Scalar> coords = zero_vec(ctx->degree(), ctx->base().zero());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) coords[i] = p.coeffs()[i];
    out.push_back(ctx->from_coords(std::move(coords)));
  }
  return out;
}

template <FieldDomain F>
nlohmann::json basis_text_json(const std::vector<Element<F>>& vectors) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : vectors) arr.push_back(vec_text(v.coords()));
  return arr;
}

template <FieldDomain F>
nlohmann::json outcome_json(const LmpOutcome<F>& o) {
  nlohmann::json j;
  j["field"] = o.field;
  j["holds"] = o.holds;
  j["pairs_checked"] = o.pairs_checked;
  j["bases_checked"] = o.bases_checked;
  if (o.witness) {
    j["witness"] = nlohmann::json{{"a_rref", mat_text_json(o.witness->a.rows())},
                                  {"b_rref", mat_text_json(o.witness->b.rows())},
                                  {"a_basis", basis_text_json(o.witness->a_basis.vectors)}};
  }
  return j;
}

// ---------------------------------------------------------------- options --

struct Options {
  // shared
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;

  // match-group
  std::string group, set_a, set_b;

  // fields
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::size_t base_sub_degree = 1;
  bool rational = false;
  std::string modulus;

  // lmp / sampling
  std::string dims;
  std::uint64_t samples = 500;
  std::uint64_t exhaustive_bound = 16;
  bool force_exhaustive = false;

  // matched-basis
  std::string subspace_a, subspace_b, basis_a, basis_b;

  // prime-combo
  std::string degrees;
  std::uint64_t max_total = 1'000'000;

  // has-root
  std::string poly;
  std::uint64_t field_bound = std::uint64_t{1} << 20;
};

// ---------------------------------------------------------------- handlers --

Report handle_match_group(const Options& opt) {
  GroupSpec spec = GroupSpec::parse(opt.group);
  GroupSubset a(spec, parse_group_set(spec, opt.set_a));
  GroupSubset b(spec, parse_group_set(spec, opt.set_b));

  Report r;
  r.command = "match-group";
  r.config = {{"group", spec.describe()}, {"set_a", opt.set_a}, {"set_b", opt.set_b}};
  r.coverage = "exhaustive";

  auto phi = find_matching(a, b);
  r.result["matching"] = phi.has_value();
  if (phi) {
    require(is_matching(a, b, *phi), errc::internal, "search returned an invalid matching");
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : phi->pairs) pairs.push_back(nlohmann::json::array({x, y}));
    r.result["pairs"] = pairs;
  }
  return r;
}

Report handle_field_info(const Options& opt) {
  PrimeField gf(opt.p);
  auto ctx = Extension<PrimeField>::make(gf, find_irreducible(gf, opt.n));

  Report r;
  r.command = "field-info";
  r.config = {{"p", opt.p}, {"n", opt.n}, {"base_sub_degree", opt.base_sub_degree}};
  r.coverage = "exhaustive";
  r.result["field"] = ctx->describe();
  r.result["modulus"] = poly_text(ctx->modulus());

  nlohmann::json degrees = nlohmann::json::array();
  nlohmann::json subfields = nlohmann::json::array();
  for (std::size_t m : subfield_degrees(*ctx)) {
    degrees.push_back(m);
    SubfieldBasis sb = subfield_basis(ctx, m);
    bool closure_exhaustive = false;
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < m && small; ++i) {
      count *= opt.p;
      if (count > 256) small = false;
    }
    if (small) {
      // Exhaustive closure sweep over all p^m elements.
      auto elems = sb.elements();
      closure_exhaustive = true;
      for (const auto& x : elems)
        for (const auto& y : elems)
          if (!sb.contains(x * y)) closure_exhaustive = false;
      require(closure_exhaustive, errc::internal, "subfield closure sweep failed");
      require(elems.size() == count, errc::internal, "subfield has wrong cardinality");
    }
    subfields.push_back(nlohmann::json{{"m", m},
                                       {"basis", basis_text_json(sb.basis)},
                                       {"closure_exhaustive", closure_exhaustive}});
  }
  r.result["subfield_degrees"] = degrees;
  r.result["subfields"] = subfields;

  std::vector<std::size_t> interm = intermediate_degrees(*ctx, opt.base_sub_degree);
  r.result["intermediate_degrees"] = interm;
  r.result["has_proper_intermediate"] = !interm.empty();
  return r;
}

template <FieldDomain F>
void run_matched_basis(const std::shared_ptr<const Extension<F>>& ctx, const Options& opt,
                       Report& r) {
  std::vector<Element<F>> va = parse_vectors(ctx, opt.subspace_a);
  std::vector<Element<F>> vb = parse_vectors(ctx, opt.subspace_b);
  Subspace<F> A = Subspace<F>::span(ctx, va);
  Subspace<F> B = Subspace<F>::span(ctx, vb);

  std::vector<Element<F>> basis_a_vecs =
      opt.basis_a.empty() ? A.basis_elements() : parse_vectors(ctx, opt.basis_a);
  OrderedBasis<F> a_basis(A, basis_a_vecs);
  r.config["basis_a"] = basis_text_json(basis_a_vecs);
  r.config["subspace_a_rref"] = mat_text_json(A.rows());
  r.config["subspace_b_rref"] = mat_text_json(B.rows());

  if (!opt.basis_b.empty()) {
    OrderedBasis<F> b_basis(B, parse_vectors(ctx, opt.basis_b));
    r.config["basis_b"] = basis_text_json(b_basis.vectors);
    r.result["mode"] = "verify";
    r.result["matched"] = is_matched_basis(a_basis, b_basis);
    return;
  }

  r.result["mode"] = "search";
  auto cert = find_matched_basis_certified(a_basis, B);
  r.result["found"] = cert.has_value();
  if (cert) {
    r.result["b_basis"] = basis_text_json(cert->b_basis.vectors);
    nlohmann::json blockers = nlohmann::json::array();
    for (const auto& s : cert->blockers) blockers.push_back(mat_text_json(s.rows()));
    r.result["blockers"] = blockers;
  } else {
    r.result["proved_none"] = true;
  }
}

Report handle_matched_basis(const Options& opt) {
  Report r;
  r.command = "matched-basis";
  r.coverage = "exhaustive";
  if (opt.rational) {
    require(!opt.modulus.empty(), errc::invalid_argument, "--rational requires --modulus");
    RationalField q;
    auto ctx = Extension<RationalField>::make(q, parse_poly(q, opt.modulus));
    r.config = {{"rational", true}, {"modulus", poly_text(ctx->modulus())}};
    run_matched_basis(ctx, opt, r);
  } else {
    PrimeField gf(opt.p);
    Poly<Fp> mod = opt.modulus.empty() ? find_irreducible(gf, opt.n) : parse_poly(gf, opt.modulus);
    auto ctx = Extension<PrimeField>::make(gf, mod);
    r.config = {{"p", opt.p},
                {"n", static_cast<std::size_t>(ctx->degree())},
                {"modulus", poly_text(ctx->modulus())}};
    run_matched_basis(ctx, opt, r);
  }
  return r;
}

Report handle_lmp(const Options& opt) {
  PrimeField gf(opt.p);
  auto flat = Extension<PrimeField>::make(gf, find_irreducible(gf, opt.n));
  SubfieldBasis base_sub = subfield_basis(flat, opt.base_sub_degree);
  std::vector<std::size_t> interm = intermediate_degrees(*flat, opt.base_sub_degree);

  LmpOptions lopt;
  lopt.dims = parse_dims(opt.dims);
  lopt.seed = opt.seed;
  lopt.sample_count = opt.samples;
  lopt.exhaustive_field_bound = opt.exhaustive_bound;
  lopt.force_exhaustive = opt.force_exhaustive;

  Report r;
  r.command = "lmp";
  r.seed = opt.seed;
  r.config = {{"p", opt.p},
              {"n", opt.n},
              {"base_sub_degree", opt.base_sub_degree},
              {"dims", opt.dims},
              {"samples", opt.samples},
              {"exhaustive_bound", opt.exhaustive_bound},
              {"flat_modulus", poly_text(flat->modulus())}};

  if (opt.base_sub_degree > 1) {
    TowerField tower = make_tower(opt.p, opt.base_sub_degree, opt.n / opt.base_sub_degree);
    r.config["tower_base_modulus"] = poly_text(tower.base_field->modulus());
    r.config["tower_modulus"] = poly_text(tower.field->modulus());
  }
  RelativeLmpOutcome out = linear_matching_property_by_search(flat, base_sub, lopt);
  std::visit([&](const auto& o) { r.result = outcome_json(o); }, out);
  Coverage cov = relative_lmp_coverage(out);
  std::uint64_t count = relative_lmp_pairs(out);
  r.result["base_subfield_degree"] = opt.base_sub_degree;
  r.result["relative_degree"] = opt.n / opt.base_sub_degree;
  r.result["base_subfield_basis"] = basis_text_json(base_sub.basis);
  r.result["intermediate_degrees"] = interm;
  r.result["has_proper_intermediate"] = !interm.empty();
  r.coverage = coverage_text(cov, count);
  return r;
}

Report handle_min_lmp_witness(const Options& opt) {
  Report r;
  r.command = "min-lmp-witness";
  r.seed = opt.seed;
  r.coverage = "none";

  LmpOptions lopt;
  lopt.seed = opt.seed;
  lopt.sample_count = opt.samples;
  lopt.dims = parse_dims(opt.dims.empty() ? "1,2" : opt.dims);
  lopt.exhaustive_field_bound = opt.exhaustive_bound;

  auto finish = [&](auto ctx) {
    r.result["field"] = ctx->describe();
    r.result["degree"] = static_cast<std::size_t>(ctx->degree());
    r.result["degree_is_prime"] = true;  // construction rejects composite degrees
    if (opt.samples > 0) {
      auto o = linear_matching_property_by_search(ctx, lopt);
      r.result["search"] = outcome_json(o);
      r.result["search"]["dims"] = lopt.dims;
      r.coverage = coverage_text(o.coverage, o.pairs_checked);
    }
  };

  if (opt.rational) {
    RationalField q;
    r.config = {{"rational", true},
                {"modulus", opt.modulus},
                {"dims", opt.dims.empty() ? "1,2" : opt.dims},
                {"samples", opt.samples}};
    finish(minimal_lmp_witness(q, parse_poly(q, opt.modulus)));
  } else {
    PrimeField gf(opt.p);
    r.config = {{"p", opt.p},
                {"modulus", opt.modulus},
                {"dims", opt.dims.empty() ? "1,2" : opt.dims},
                {"samples", opt.samples}};
    finish(minimal_lmp_witness(gf, parse_poly(gf, opt.modulus)));
  }
  return r;
}

Report handle_prime_combo(const Options& opt) {
  std::vector<std::uint64_t> degrees;
  for (const std::string& tok : split(opt.degrees, ',')) {
    try {
      degrees.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "cannot parse degree list '" + opt.degrees + "'");
    }
  }
  DegreeSystem sys(degrees);
  PrimeCombo combo = prime_combination(sys, opt.max_total);

  Report r;
  r.command = "prime-combo";
  r.config = {{"degrees", degrees}, {"max_total", opt.max_total}};
  r.coverage = "exhaustive";
  r.result["coefficients"] = combo.coefficients;
  r.result["total"] = combo.total;
  r.result["total_is_prime"] = true;  // constructor-checked
  return r;
}

Report handle_has_root(const Options& opt) {
  Report r;
  r.command = "has-root";
  r.coverage = "exhaustive";
  if (opt.rational) {
    RationalField q;
    Poly<Rational> f = parse_poly(q, opt.poly);
    r.config = {{"rational", true}, {"poly", poly_text(f)}};
    r.result["has_root"] = has_root(f);
  } else {
    PrimeField gf(opt.p);
    Poly<Fp> f = parse_poly(gf, opt.poly);
    r.config = {{"p", opt.p}, {"n", opt.n == 0 ? 1 : opt.n}, {"poly", poly_text(f)}};
    if (opt.n <= 1) {
      r.result["has_root"] = has_root(f, gf);
    } else {
      auto ctx = Extension<PrimeField>::make(gf, find_irreducible(gf, opt.n));
      r.config["modulus"] = poly_text(ctx->modulus());
      r.result["has_root"] = has_root(f, ctx, opt.field_bound);
    }
  }
  return r;
}

// ----------------------------------------------------------------- driver --

struct Parsed {
  Options opt;
  std::string command;
};

struct HelpRequested {
  std::string text;
};

Parsed parse_args(const std::vector<std::string>& args) {
  Parsed parsed;
  Options& opt = parsed.opt;

  CLI::App app{"exact matchings in abelian groups and field extensions"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", opt.out_path, "write the report to this path");
    sub->add_option("--seed", opt.seed, "seed recorded in the report");
  };

  CLI::App* mg = app.add_subcommand("match-group", "search a matching between group subsets");
  mg->add_option("--group", opt.group)->required();
  mg->add_option("--set-a", opt.set_a)->required();
  mg->add_option("--set-b", opt.set_b)->required();
  add_common(mg);

  CLI::App* fi = app.add_subcommand("field-info", "subfield lattice of GF(p^n)");
  fi->add_option("--p", opt.p)->required();
  fi->add_option("--n", opt.n)->required();
  fi->add_option("--base-sub-degree", opt.base_sub_degree);
  add_common(fi);

  CLI::App* mb = app.add_subcommand("matched-basis", "verify or search a matched basis");
  mb->add_option("--p", opt.p);
  mb->add_option("--n", opt.n);
  mb->add_flag("--rational", opt.rational);
  mb->add_option("--modulus", opt.modulus);
  mb->add_option("--subspace-a", opt.subspace_a)->required();
  mb->add_option("--subspace-b", opt.subspace_b)->required();
  mb->add_option("--basis-a", opt.basis_a);
  mb->add_option("--basis-b", opt.basis_b);
  add_common(mb);

  CLI::App* lm = app.add_subcommand("lmp", "linear matching property sweep");
  lm->add_option("--p", opt.p)->required();
  lm->add_option("--n", opt.n)->required();
  lm->add_option("--base-sub-degree", opt.base_sub_degree);
  lm->add_option("--dims", opt.dims)->required();
  lm->add_option("--samples", opt.samples);
  lm->add_option("--exhaustive-bound", opt.exhaustive_bound);
  lm->add_flag("--force-exhaustive", opt.force_exhaustive);
  add_common(lm);

  CLI::App* mw = app.add_subcommand("min-lmp-witness", "prime-degree extension witness");
  mw->add_option("--p", opt.p);
  mw->add_flag("--rational", opt.rational);
  mw->add_option("--modulus", opt.modulus)->required();
  mw->add_option("--dims", opt.dims);
  mw->add_option("--samples", opt.samples);
  mw->add_option("--exhaustive-bound", opt.exhaustive_bound);
  add_common(mw);

  CLI::App* pc = app.add_subcommand("prime-combo", "prime-valued combination of degrees");
  pc->add_option("--degrees", opt.degrees)->required();
  pc->add_option("--max-total", opt.max_total);
  add_common(pc);

  CLI::App* hr = app.add_subcommand("has-root", "root existence in a field");
  hr->add_option("--poly", opt.poly)->required();
  hr->add_option("--p", opt.p);
  hr->add_option("--n", opt.n);
  hr->add_flag("--rational", opt.rational);
  hr->add_option("--field-bound", opt.field_bound);
  add_common(hr);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    fail(errc::invalid_argument, e.what());
  }
  parsed.command = app.get_subcommands().at(0)->get_name();
  return parsed;
}

Report dispatch(const Parsed& parsed) {
  const Options& opt = parsed.opt;
  if (parsed.command == "match-group") return handle_match_group(opt);
  if (parsed.command == "field-info") return handle_field_info(opt);
  if (parsed.command == "matched-basis") return handle_matched_basis(opt);
  if (parsed.command == "lmp") return handle_lmp(opt);
  if (parsed.command == "min-lmp-witness") return handle_min_lmp_witness(opt);
  if (parsed.command == "prime-combo") return handle_prime_combo(opt);
  if (parsed.command == "has-root") return handle_has_root(opt);
  fail(errc::invalid_argument, "unknown subcommand " + parsed.command);
}

}  // namespace

Report run_report(const std::vector<std::string>& args) {
  Parsed parsed = parse_args(args);
  auto start = std::chrono::steady_clock::now();
  Report r = dispatch(parsed);
  r.seed = parsed.opt.seed;
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Parsed parsed = parse_args(args);
    auto start = std::chrono::steady_clock::now();
    Report r = dispatch(parsed);
    r.seed = parsed.opt.seed;
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (parsed.opt.format == "csv") text = report_to_csv(r);
    else if (parsed.opt.format == "text") text = report_to_text(r);
    else text = report_to_json(r).dump(2) + "\n";

    if (!parsed.opt.out_path.empty()) {
      std::ofstream f(parsed.opt.out_path);
      require(f.good(), errc::invalid_argument, "cannot open output file " + parsed.opt.out_path);
      f << text;
    } else {
      out << text;
    }
    return 0;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

// ------------------------------------------------------------- reverify --

namespace {

bool reverify_match_group(const nlohmann::json& config, const nlohmann::json& result) {
  GroupSpec spec = GroupSpec::parse(config["group"].get<std::string>());
  GroupSubset a(spec, parse_group_set(spec, config["set_a"].get<std::string>()));
  GroupSubset b(spec, parse_group_set(spec, config["set_b"].get<std::string>()));
  if (result["matching"].get<bool>()) {
    GroupMatching phi;
    for (const auto& pr : result["pairs"]) {
      phi.pairs.emplace_back(pr[0].get<GroupElem>(), pr[1].get<GroupElem>());
    }
    return is_matching(a, b, phi);
  }
  return !find_matching(a, b).has_value();
}

bool reverify_field_info(const nlohmann::json& config, const nlohmann::json& result) {
  PrimeField gf(config["p"].get<std::uint64_t>());
  auto ctx = Extension<PrimeField>::make(gf, find_irreducible(gf, config["n"].get<std::size_t>()));
  if (result["modulus"].get<std::string>() != poly_text(ctx->modulus())) return false;
  for (const auto& sf : result["subfields"]) {
    SubfieldBasis sb = subfield_basis(ctx, sf["m"].get<std::size_t>());
    nlohmann::json basis = basis_text_json(sb.basis);
    if (basis != sf["basis"]) return false;
  }
  std::vector<std::size_t> interm =
      intermediate_degrees(*ctx, config["base_sub_degree"].get<std::size_t>());
  return result["intermediate_degrees"].get<std::vector<std::size_t>>() == interm &&
         result["has_proper_intermediate"].get<bool>() == !interm.empty();
}

template <FieldDomain F>
bool reverify_matched_basis_in(const std::shared_ptr<const Extension<F>>& ctx,
                               const nlohmann::json& config, const nlohmann::json& result) {
  Subspace<F> A = Subspace<F>::from_rows(ctx, mat_from_text_json(ctx->base(), config["subspace_a_rref"]));
  Subspace<F> B = Subspace<F>::from_rows(ctx, mat_from_text_json(ctx->base(), config["subspace_b_rref"]));
  std::vector<Element<F>> va;
  for (const auto& v : config["basis_a"]) va.push_back(ctx->from_coords(vec_from_text(ctx->base(), v.get<std::string>())));
  OrderedBasis<F> a_basis(A, va);

  if (result["mode"].get<std::string>() == "verify") {
    std::vector<Element<F>> vb;
    for (const auto& v : config["basis_b"]) vb.push_back(ctx->from_coords(vec_from_text(ctx->base(), v.get<std::string>())));
    return is_matched_basis(a_basis, OrderedBasis<F>(B, vb)) == result["matched"].get<bool>();
  }
  if (result["found"].get<bool>()) {
    std::vector<Element<F>> vb;
    for (const auto& v : result["b_basis"]) vb.push_back(ctx->from_coords(vec_from_text(ctx->base(), v.get<std::string>())));
    std::vector<Subspace<F>> blockers;
    for (const auto& m : result["blockers"])
      blockers.push_back(Subspace<F>::from_rows(ctx, mat_from_text_json(ctx->base(), m)));
    MatchedBasisCertificate<F> cert{a_basis, OrderedBasis<F>(B, vb), blockers};
    return cert.verify();
  }
  if constexpr (F::is_finite) {
    return !find_matched_basis_exhaustive(a_basis, B).has_value();
  } else {
    return !find_matched_basis(a_basis, B).has_value();
  }
}

bool reverify_matched_basis(const nlohmann::json& config, const nlohmann::json& result) {
  if (config.contains("rational") && config["rational"].get<bool>()) {
    RationalField q;
    auto ctx = Extension<RationalField>::make(q, parse_poly(q, config["modulus"].get<std::string>()));
    return reverify_matched_basis_in(ctx, config, result);
  }
  PrimeField gf(config["p"].get<std::uint64_t>());
  auto ctx = Extension<PrimeField>::make(gf, parse_poly(gf, config["modulus"].get<std::string>()));
  return reverify_matched_basis_in(ctx, config, result);
}

template <FieldDomain F>
bool reverify_lmp_witness(const std::shared_ptr<const Extension<F>>& L, const nlohmann::json& w) {
  Subspace<F> A = Subspace<F>::from_rows(L, mat_from_text_json(L->base(), w["a_rref"]));
  Subspace<F> B = Subspace<F>::from_rows(L, mat_from_text_json(L->base(), w["b_rref"]));
  if (B.contains_one() || A.dim() != B.dim()) return false;
  std::vector<Element<F>> va;
  for (const auto& v : w["a_basis"]) va.push_back(L->from_coords(vec_from_text(L->base(), v.get<std::string>())));
  OrderedBasis<F> a_basis(A, va);
  if constexpr (F::is_finite) {
    return !find_matched_basis_exhaustive(a_basis, B).has_value();
  } else {
    return !find_matched_basis(a_basis, B).has_value();
  }
}

bool reverify_lmp(const nlohmann::json& config, const nlohmann::json& result) {
  const std::uint64_t p = config["p"].get<std::uint64_t>();
  const std::size_t n = config["n"].get<std::size_t>();
  const std::size_t m0 = config["base_sub_degree"].get<std::size_t>();
  PrimeField gf(p);
  auto flat = Extension<PrimeField>::make(gf, find_irreducible(gf, n));
  std::vector<std::size_t> interm = intermediate_degrees(*flat, m0);
  if (result["intermediate_degrees"].get<std::vector<std::size_t>>() != interm) return false;
  if (result["has_proper_intermediate"].get<bool>() != !interm.empty()) return false;
  if (result["holds"].get<bool>()) return !result.contains("witness");
  if (!result.contains("witness")) return false;
  if (m0 == 1) return reverify_lmp_witness(flat, result["witness"]);
  TowerField tower = make_tower(p, m0, n / m0);
  return reverify_lmp_witness(tower.field, result["witness"]);
}

bool reverify_min_lmp_witness(const nlohmann::json& config, const nlohmann::json& result,
                              std::uint64_t seed) {
  LmpOptions lopt;
  lopt.seed = seed;
  bool rerun = result.contains("search");
  if (rerun) {
    lopt.dims = parse_dims(config["dims"].get<std::string>());
    lopt.sample_count = config["samples"].get<std::uint64_t>();
  }
  auto check = [&](auto ctx) {
    if (static_cast<std::size_t>(ctx->degree()) != result["degree"].get<std::size_t>()) return false;
    if (!rerun) return true;
    auto o = linear_matching_property_by_search(ctx, lopt);
    return o.holds == result["search"]["holds"].get<bool>();
  };
  if (config.contains("rational") && config["rational"].get<bool>()) {
    RationalField q;
    return check(minimal_lmp_witness(q, parse_poly(q, config["modulus"].get<std::string>())));
  }
  PrimeField gf(config["p"].get<std::uint64_t>());
  return check(minimal_lmp_witness(gf, parse_poly(gf, config["modulus"].get<std::string>())));
}

bool reverify_prime_combo(const nlohmann::json& config, const nlohmann::json& result) {
  DegreeSystem sys(config["degrees"].get<std::vector<std::uint64_t>>());
  PrimeCombo combo = prime_combination(sys, config["max_total"].get<std::uint64_t>());
  return combo.coefficients == result["coefficients"].get<std::vector<std::uint64_t>>() &&
         combo.total == result["total"].get<std::uint64_t>();
}

bool reverify_has_root(const nlohmann::json& config, const nlohmann::json& result) {
  const bool expected = result["has_root"].get<bool>();
  if (config.contains("rational") && config["rational"].get<bool>()) {
    RationalField q;
    return has_root(parse_poly(q, config["poly"].get<std::string>())) == expected;
  }
  PrimeField gf(config["p"].get<std::uint64_t>());
  Poly<Fp> f = parse_poly(gf, config["poly"].get<std::string>());
  std::size_t n = config["n"].get<std::size_t>();
  if (n <= 1) return has_root(f, gf) == expected;
  auto ctx = Extension<PrimeField>::make(gf, find_irreducible(gf, n));
  return has_root(f, ctx) == expected;
}

}  // namespace

bool reverify_report(const nlohmann::json& report) {
  try {
    Report r = report_from_json(report);
    if (r.command == "match-group") return reverify_match_group(r.config, r.result);
    if (r.command == "field-info") return reverify_field_info(r.config, r.result);
    if (r.command == "matched-basis") return reverify_matched_basis(r.config, r.result);
    if (r.command == "lmp") return reverify_lmp(r.config, r.result);
    if (r.command == "min-lmp-witness") return reverify_min_lmp_witness(r.config, r.result, r.seed);
    if (r.command == "prime-combo") return reverify_prime_combo(r.config, r.result);
    if (r.command == "has-root") return reverify_has_root(r.config, r.result);
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace linmatch::cli
