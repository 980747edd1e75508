#include "qr/cli/commands.hpp"

#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "qr/cli/quandle_spec.hpp"
#include "qr/cli/reproduce.hpp"
#include "qr/corez.hpp"
#include "qr/errors.hpp"
#include "qr/filtration.hpp"
#include "qr/idempotents.hpp"
#include "qr/poly_system.hpp"
#include "qr/ring_automorphism.hpp"

namespace qr::cli {

namespace {

struct Options {
  std::string quandle;
  std::string from;
  std::string to;
  std::size_t max_power = 1;
  long bound = 2;
  std::string aug = "both";
  int aug_value = 1;
  long search_box = -1;
  bool ring = false;
  std::string check;
  std::size_t samples = 1000;
  std::uint64_t seed = corez::default_seed;
  long window = 20;
  int depth = 5;
  std::string claim;
  unsigned jobs = 1;
  bool json = false;
};

struct Result {
  bool ok = true;
  Json data = Json::object();
};

Json perm_json(const Perm& p) { return Json(p); }

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(to_json(row));
  return a;
}

Result cmd_props(const Options& o, const SizeCaps& caps) {
  const QuandleSpec spec = parse_quandle_spec(o.quandle);
  const Quandle q = build_quandle(spec);
  const PropertyReport p = properties(q, caps);
  Result r;
  r.data["quandle"] = spec.print();
  r.data["order"] = q.size();
  r.data["latin"] = p.latin;
  r.data["semi_latin"] = p.semi_latin;
  r.data["commutative"] = p.commutative;
  r.data["connected"] = p.connected;
  r.data["faithful"] = p.faithful;
  r.data["involutory"] = p.involutory;
  r.data["almost_latin_degree"] = p.almost_latin_degree ? Json(*p.almost_latin_degree) : Json(nullptr);
  r.data["inn_order"] = p.inn_order;
  return r;
}

Result cmd_delta(const Options& o, const SizeCaps&) {
  const QuandleSpec spec = parse_quandle_spec(o.quandle);
  if (o.max_power < 1) throw Error(Errc::invalid_param, "--max-power must be at least 1");
  const Filtration f = filtration(std::make_shared<const Quandle>(build_quandle(spec)), o.max_power + 1);
  Result r;
  r.data["quandle"] = spec.print();
  r.data["symbol"] = std::string(spec.delta_symbol());
  Json powers = Json::array();
  for (std::size_t k = 1; k <= o.max_power; ++k) {
    const Lattice& l = f.powers[k - 1];
    powers.push_back({{"k", k},
                      {"rank", l.rank()},
                      {"basis", basis_json(l, spec.delta_symbol())},
                      {"quotient", to_string(f.quotients[k - 1])}});
  }
  r.data["powers"] = powers;
  return r;
}

Result cmd_idem(const Options& o, const SizeCaps& caps) {
  const QuandleSpec spec = parse_quandle_spec(o.quandle);
  const auto q = std::make_shared<const Quandle>(build_quandle(spec));
  const IdempotentSet set = enumerate_idempotents(q, o.bound, caps, o.jobs);
  Result r;
  r.data["quandle"] = spec.print();
  r.data["bound"] = o.bound;
  const auto slice = [&](int sigma, const std::vector<DeltaVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs)
      a.push_back({{"element", to_string(idempotent_element(q, sigma, v))}, {"coords", to_json(v.coords)}});
    return a;
  };
  if (o.aug == "0" || o.aug == "both") {
    r.data["aug0_count"] = set.aug0.size();
    r.data["aug0"] = slice(0, set.aug0);
  }
  if (o.aug == "1" || o.aug == "both") {
    r.data["aug1_count"] = set.aug1.size();
    r.data["aug1"] = slice(1, set.aug1);
  }
  return r;
}

Result cmd_system(const Options& o, const SizeCaps& caps) {
  const QuandleSpec spec = parse_quandle_spec(o.quandle);
  const Quandle q = build_quandle(spec);
  const PolySystem s = build_system(q, o.aug_value);
  Result r;
  r.data["quandle"] = spec.print();
  r.data["aug"] = o.aug_value;
  r.data["variables"] = s.num_vars;
  Json eqs = Json::array();
  for (const auto& e : s.equations) eqs.push_back(to_string(e) + " = 0");
  r.data["equations"] = eqs;
  if (o.search_box >= 0) {
    Json sols = Json::array();
    for (const auto& v : search_system(s, o.search_box, caps, o.jobs)) sols.push_back(to_json(v.coords));
    r.data["search_box"] = o.search_box;
    r.data["solution_count"] = sols.size();
    r.data["solutions"] = sols;
  }
  return r;
}

Result cmd_aut(const Options& o, const SizeCaps& caps) {
  const QuandleSpec spec = parse_quandle_spec(o.quandle);
  const auto q = std::make_shared<const Quandle>(build_quandle(spec));
  const auto auts = automorphisms(*q, caps);
  Result r;
  r.data["quandle"] = spec.print();
  r.data["automorphism_count"] = auts.size();
  Json list = Json::array();
  for (const auto& f : auts) list.push_back(perm_json(f));
  r.data["automorphisms"] = list;
  if (o.ring) {
    const auto ring = ring_automorphisms_in_box(q, o.bound, caps);
    Json mats = Json::array();
    for (const auto& m : ring) mats.push_back(matrix_json(m));
    r.data["ring_bound"] = o.bound;
    r.data["ring_automorphism_count"] = ring.size();
    r.data["ring_automorphisms"] = mats;
  }
  return r;
}

Result cmd_hom(const Options& o, const SizeCaps& caps) {
  const QuandleSpec from = parse_quandle_spec(o.from);
  const QuandleSpec to = parse_quandle_spec(o.to);
  const auto homs = homomorphisms(build_quandle(from), build_quandle(to), caps);
  Result r;
  r.data["from"] = from.print();
  r.data["to"] = to.print();
  r.data["homomorphism_count"] = homs.size();
  Json list = Json::array();
  for (const auto& f : homs) list.push_back(perm_json(f));
  r.data["homomorphisms"] = list;
  return r;
}

Result cmd_corez(const Options& o, const SizeCaps& caps) {
  Result r;
  r.data["check"] = o.check;
  if (o.check == "extremal") {
    const corez::RandomSweep s = corez::extremal_sweep(o.samples, o.seed, o.jobs);
    r.ok = s.failures == 0;
    r.data["seed"] = s.seed;
    r.data["samples"] = s.samples;
    r.data["failures"] = s.failures;
    r.data["failing_samples"] = s.failing_samples;
  } else if (o.check == "idempotent") {
    Json found = Json::array();
    for (std::size_t i = 0; i < o.samples; ++i) {
      const corez::Element u = corez::random_element(o.seed, i);
      if (corez::is_idempotent(u).idempotent && u.support_size() > 1) found.push_back(corez::to_string(u));
    }
    r.ok = found.empty();
    r.data["seed"] = o.seed;
    r.data["samples"] = o.samples;
    r.data["nontrivial_idempotents"] = found;
  } else if (o.check == "commutator") {
    Json failed = Json::array();
    for (long a = -30; a <= 30; a += 3)
      if (!corez::commutator_identity(Integer(a))) failed.push_back(a);
    r.ok = failed.empty();
    r.data["a_values"] = "-30..30 step 3";
    r.data["failures"] = failed;
  } else if (o.check == "order") {
    const corez::OrderProbe p = corez::order_probe(o.window);
    r.ok = p.passed();
    r.data["window"] = p.window;
    r.data["checks"] = p.checks;
    r.data["left_failures"] = p.left_failures;
    r.data["right_failures"] = p.right_failures;
  } else if (o.check == "dyadic") {
    const corez::DyadicProbe p = corez::dyadic_probe(o.depth, caps);
    r.ok = p.all_normalized && p.commutative && p.idempotent;
    r.data["depth"] = p.depth;
    r.data["sizes"] = p.sizes;
    r.data["all_normalized"] = p.all_normalized;
    r.data["commutative"] = p.commutative;
    r.data["idempotent"] = p.idempotent;
  } else {
    throw Error(Errc::invalid_param, "unknown corez check '" + o.check + "'");
  }
  return r;
}

Result cmd_reproduce(const Options& o, const SizeCaps& caps) {
  std::vector<std::string_view> ids;
  if (o.claim == "all") ids = claim_ids();
  else if (is_claim(o.claim)) ids.push_back(o.claim);
  else throw Error(Errc::invalid_param, "unknown claim id '" + o.claim + "'");
  const auto reports = run_claims(ids, o.jobs, caps);
  Result r;
  r.ok = all_passed(reports);
  Json claims = Json::array();
  std::size_t pass = 0, fail = 0, evidence = 0;
  for (const auto& rep : reports) {
    claims.push_back(rep.to_json());
    pass += rep.status == ClaimStatus::pass;
    fail += rep.status == ClaimStatus::fail;
    evidence += rep.status == ClaimStatus::evidence_only;
  }
  r.data["passed"] = pass;
  r.data["failed"] = fail;
  r.data["evidence_only"] = evidence;
  r.data["claims"] = claims;
  return r;
}

void print_reproduce_text(std::ostream& out, const Json& data) {
  for (const auto& c : data["claims"]) {
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << c["wall_time_s"].get<double>();
    out << c["claim_id"].get<std::string>() << "  " << c["status"].get<std::string>() << "  " << time.str() << " s  "
        << c["summary"].get<std::string>() << '\n';
    render_text(out, c["artifacts"], 4);
  }
  out << "passed: " << data["passed"] << "  failed: " << data["failed"] << "  evidence-only: " << data["evidence_only"]
      << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quandle ring toolkit"};
  app.require_subcommand(1);
  Options o;

  const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit a JSON report"); };
  const auto jobs_opt = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* props = app.add_subcommand("props", "Structural properties of a quandle");
  props->add_option("--quandle", o.quandle, "Quandle spec")->required();
  json_flag(props);

  auto* delta = app.add_subcommand("delta", "Powers of the augmentation ideal");
  delta->add_option("--quandle", o.quandle, "Quandle spec")->required();
  delta->add_option("--max-power", o.max_power, "Largest power k")->required()->check(CLI::Range(1, 64));
  json_flag(delta);

  auto* idem = app.add_subcommand("idem", "Idempotents in a coordinate box");
  idem->add_option("--quandle", o.quandle, "Quandle spec")->required();
  idem->add_option("--bound", o.bound, "Box bound on E-coordinates")->required()->check(CLI::Range(0L, 1000000L));
  idem->add_option("--aug", o.aug, "Augmentation slice")->check(CLI::IsMember({"0", "1", "both"}));
  jobs_opt(idem);
  json_flag(idem);

  auto* system = app.add_subcommand("system", "Quadratic idempotent system");
  system->add_option("--quandle", o.quandle, "Quandle spec")->required();
  system->add_option("--aug", o.aug_value, "Augmentation value")->required()->check(CLI::IsMember({0, 1}));
  system->add_option("--search-box", o.search_box, "Search integer solutions in [-B, B]")
      ->check(CLI::Range(0L, 1000000L));
  jobs_opt(system);
  json_flag(system);

  auto* aut = app.add_subcommand("aut", "Quandle and ring automorphisms");
  aut->add_option("--quandle", o.quandle, "Quandle spec")->required();
  aut->add_flag("--ring", o.ring, "Also search ring automorphisms");
  aut->add_option("--bound", o.bound, "Box bound for ring automorphism images")->check(CLI::Range(0L, 100L));
  json_flag(aut);

  auto* hom = app.add_subcommand("hom", "Quandle homomorphisms");
  hom->add_option("--from", o.from, "Source spec")->required();
  hom->add_option("--to", o.to, "Target spec")->required();
  json_flag(hom);

  auto* cz = app.add_subcommand("corez", "Checks in Z[Core(Z)]");
  cz->add_option("--check", o.check, "Check to run")
      ->required()
      ->check(CLI::IsMember({"extremal", "idempotent", "commutator", "order", "dyadic"}));
  cz->add_option("--samples", o.samples, "Random samples");
  cz->add_option("--seed", o.seed, "Random seed");
  cz->add_option("--window", o.window, "Order probe window")->check(CLI::Range(0L, 1000L));
  cz->add_option("--depth", o.depth, "Dyadic closure depth")->check(CLI::Range(0, 64));
  jobs_opt(cz);
  json_flag(cz);

  auto* repro = app.add_subcommand("reproduce", "Re-derive the stated claims");
  repro->add_option("claim", o.claim, "Claim id or 'all'")->required();
  jobs_opt(repro);
  json_flag(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const SizeCaps caps = SizeCaps::from_env();
  Result r;
  try {
    if (name == "props") r = cmd_props(o, caps);
    else if (name == "delta") r = cmd_delta(o, caps);
    else if (name == "idem") r = cmd_idem(o, caps);
    else if (name == "system") r = cmd_system(o, caps);
    else if (name == "aut") r = cmd_aut(o, caps);
    else if (name == "hom") r = cmd_hom(o, caps);
    else if (name == "corez") r = cmd_corez(o, caps);
    else r = cmd_reproduce(o, caps);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  const std::string status = r.ok ? "pass" : "fail";
  if (o.json) {
    Json report;
    report["command"] = name;
    report["status"] = status;
    report["data"] = r.data;
    out << report.dump(2) << '\n';
  } else if (name == "reproduce") {
    print_reproduce_text(out, r.data);
  } else {
    render_text(out, r.data);
    if (!r.ok) out << "status: fail\n";
  }
  return r.ok ? exit_ok : exit_check_failed;
}

}  // namespace qr::cli
