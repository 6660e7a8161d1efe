#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "prefnet/axioms.hpp"
#include "prefnet/generators.hpp"
#include "prefnet/parallel.hpp"
#include "prefnet/reference.hpp"
#include "prefnet/rules.hpp"
#include "prefnet/stability.hpp"

#ifndef PREFNET_VERSION
#define PREFNET_VERSION "0.0.0"
#endif

namespace prefnet::cli {

namespace {

struct Options {
  std::uint64_t seed = 1;
  int jobs = 0;
  std::uint64_t budget = 1000;
  bool force = false;
  std::string format = "table";
  bool paper = false;
  std::string instance = "b3ct";
  std::string input;

  std::string rule = "harmonious";
  int g = 0;
  std::string lambda;
  std::string set;

  // check
  std::vector<std::string> properties;
  bool witness = false;
  // enumerate
  int cap = 20;
  // axioms
  std::string axiom = "core";
  std::string aggregation;
  int min_n = 2, max_n = 6, agg_n = 3, voters = 2;
  // stability / identify
  std::string delta = "1/4";
  std::string perturbed;
  bool exhaustive = false, preserving = false;
  std::string mode = "sampling";
  bool brute = false;
  // generate
  std::string out;
  int duos = 4, n = 6, pad = 0;
  std::string planted;
  double loyalty = 0.8;
};

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InputError("not a number: '" + text + "'"); };
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash != std::string::npos) {
      const auto num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw bad();
      const auto rest = text.substr(slash + 1);
      const auto den = std::stoll(rest, &used);
      if (used != rest.size() || den == 0) throw bad();
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw bad();
      return Rational(v);
    }
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12 || !std::all_of(frac.begin(), frac.end(), ::isdigit)) throw bad();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string whole = text.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    const std::int64_t w = (whole.empty() || whole == "-") ? 0 : std::stoll(whole, &used);
    const std::int64_t f = std::stoll(frac);
    return Rational(w * den + (neg ? -f : f), den);
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string rational_str(Rational r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json labels_of(const PreferenceNetwork& net, SubsetMask m) {
  Json a = Json::array();
  m.for_each([&](MemberId i) { a.push_back(net.label(i)); });
  return a;
}

Json bijection_json(const PreferenceNetwork& net, const Bijection& b) {
  Json pairs = Json::array();
  for (auto [u, v] : b.pairs) pairs.push_back(Json::array({net.label(u), net.label(v)}));
  return Json{{"voter", net.label(b.voter)}, {"pairs", pairs}};
}

Json witness_json(const PreferenceNetwork& net, const GsWitness& w) {
  Json bs = Json::array();
  for (const auto& b : w.bijections) bs.push_back(bijection_json(net, b));
  return Json{{"group", labels_of(net, w.group)}, {"replacement", labels_of(net, w.replacement)}, {"bijections", bs}};
}

Json witness_json(const PreferenceNetwork& net, const SaWitness& w) {
  Json bs = Json::array();
  for (const auto& b : w.bijections) bs.push_back(bijection_json(net, b));
  return Json{{"replacement", labels_of(net, w.replacement)}, {"bijections", bs}};
}

Json counterexample_json(const Counterexample& cx) {
  const auto& net = cx.network;
  const auto& c = cx.context;
  Json j{{"axiom", to_string(cx.axiom)}, {"source", cx.source}, {"trace", cx.trace}};
  if (c.subset) j["subset"] = labels_of(net, *c.subset);
  if (c.departing) j["departing"] = net.label(*c.departing);
  if (c.sub_ground) j["sub_ground"] = labels_of(net, *c.sub_ground);
  if (c.sigma) {
    Json s = Json::object();
    for (MemberId v = 0; v < net.size(); ++v) s[net.label(v)] = net.label((*c.sigma)[v]);
    j["sigma"] = s;
  }
  j["network"] = network_to_json(net);
  if (c.alternate) j["alternate"] = network_to_json(*c.alternate);
  return j;
}

Json profile_json(const Profile& p) {
  Json a = Json::array();
  for (const auto& o : p) {
    Json b = Json::array();
    for (MemberId u : o.list()) b.push_back(u + 1);
    a.push_back(b);
  }
  return a;
}

// ---- table rendering ----

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + cell(x);
    return s.empty() ? "(none)" : s;
  }
  // lists of sets or pairs
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_array(); })) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "{" : " {") + cell(x) + "}";
    return s;
  }
  return v.dump();
}

void render(std::ostream& os, const Json& obj, int indent);

void render_rows(std::ostream& os, const Json& rows, int indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, _] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> grid;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? cell(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    grid.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << std::string(indent, ' ');
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& l : grid) emit(l);
}

void render(std::ostream& os, const Json& obj, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : obj.items()) {
    if (v.is_object()) {
      os << pad << k << ":\n";
      render(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
      os << pad << k << ":\n";
      render_rows(os, v, indent + 2);
    } else {
      os << pad << k << ": " << cell(v) << "\n";
    }
  }
}

// ---- command context ----

struct Run {
  Options& o;
  std::ostream& out;
  std::vector<std::string> argv;

  SearchOptions search() const { return SearchOptions{o.force, o.jobs}; }

  PreferenceNetwork network() const {
    if (o.paper) {
      for (auto& nn : reference::all_networks())
        if (nn.name == o.instance) return nn.network;
      std::string names;
      for (auto& nn : reference::all_networks()) names += (names.empty() ? "" : ", ") + nn.name;
      throw InputError("unknown built-in instance '" + o.instance + "' (one of: " + names + ")");
    }
    if (o.input.empty()) throw InputError("no network document given (pass a file or --paper-instances)");
    return load_network(o.input);
  }

  CommunityRule rule() const {
    RuleParams p;
    p.g = o.g;
    if (!o.lambda.empty()) p.lambda = parse_rational(o.lambda);
    p.search = search();
    return make_rule(o.rule, p);
  }

  SubsetMask subset(const PreferenceNetwork& net) const {
    if (o.set.empty()) throw InputError("--set is required");
    return parse_subset(net, o.set);
  }

  int emit(const std::string& command, Json result, int code) const {
    Json r;
    r["version"] = PREFNET_VERSION;
    r["seed"] = o.seed;
    r["argv"] = argv;
    r["command"] = command;
    r["result"] = std::move(result);
    if (o.format == "json") {
      out << r.dump(2) << "\n";
    } else {
      out << "prefnet " << PREFNET_VERSION << "  " << command << "  seed " << o.seed << "\n";
      render(out, r["result"], 0);
    }
    return code;
  }

  void write_out(const PreferenceNetwork& net) const {
    if (o.out.empty()) return;
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << serialize_network(net);
  }
};

// ---- commands ----

int cmd_validate(const Run& r) {
  ParsedDocument doc;
  if (r.o.paper) {
    const auto net = r.network();
    doc.raw.labels = net.labels();
    for (const auto& ord : net.orders()) doc.raw.lists.push_back(ord.list());
  } else {
    if (r.o.input.empty()) throw InputError("no network document given");
    doc = read_document(read_file(r.o.input));
  }
  Json v = Json::array();
  for (const auto& x : doc.violations) v.push_back(Json{{"member", x.member}, {"message", x.message}});
  Json res{{"valid", doc.violations.empty()}, {"members", doc.raw.labels.size()}, {"violations", v}};
  return r.emit("validate", res, doc.violations.empty() ? kExitOk : kExitUsage);
}

int cmd_check(const Run& r) {
  const auto net = r.network();
  const auto rule = r.rule();
  const auto s = r.subset(net);
  const bool member = rule(net, s);
  Json res{{"rule", rule.name}, {"set", labels_of(net, s)}, {"member", member}};
  if (r.o.witness) {
    const auto gs = gs_witness(net, s, r.search());
    const auto sa = sa_witness(net, s, r.search());
    res["gs_witness"] = gs ? witness_json(net, *gs) : Json(nullptr);
    res["sa_witness"] = sa ? witness_json(net, *sa) : Json(nullptr);
  }
  bool violated = false;
  if (!r.o.properties.empty()) {
    Json props = Json::array();
    for (const auto& name : r.o.properties) {
      const auto a = parse_axiom(name);
      const bool ok = check_property(rule, a, net, s, r.search());
      violated = violated || !ok;
      props.push_back(Json{{"property", to_string(a)}, {"holds", ok}});
    }
    res["properties"] = props;
    return r.emit("check", res, violated ? kExitViolation : kExitOk);
  }
  return r.emit("check", res, member ? kExitOk : kExitViolation);
}

int cmd_enumerate(const Run& r) {
  const auto net = r.network();
  const auto rule = r.rule();
  EnumerateOptions eo;
  eo.cap = r.o.cap;
  eo.force = r.o.force;
  eo.jobs = r.o.jobs;
  const auto sets = enumerate_rule(rule, net, eo);
  Json list = Json::array();
  for (auto m : sets) list.push_back(labels_of(net, m));
  return r.emit("enumerate", Json{{"rule", rule.name}, {"count", sets.size()}, {"sets", list}}, kExitOk);
}

AggregationFn aggregation_by_name(const std::string& name) {
  if (name == "harmonious") return harmonious_aggregator();
  if (name == "b3ct") return weighted_aggregator(b3ct_family());
  if (name == "borda") return weighted_aggregator(borda_family());
  throw InputError("unknown aggregation '" + name + "' (harmonious, b3ct, borda)");
}

int cmd_axioms(const Run& r) {
  const auto& o = r.o;
  if (!o.aggregation.empty()) {
    const auto f = aggregation_by_name(o.aggregation);
    AggTestOptions to;
    to.budget = o.budget;
    to.seed = o.seed;
    to.reference_first = o.paper;
    std::vector<AggAxiom> list;
    if (o.axiom == "core" || o.axiom == "all")
      list = {AggAxiom::U, AggAxiom::ND, AggAxiom::IIA};
    else
      list = {parse_agg_axiom(o.axiom)};
    Json rows = Json::array();
    bool any = false;
    for (auto a : list) {
      const auto cx = test_aggregation_axiom(f, a, o.agg_n, o.voters, to);
      Json row{{"axiom", to_string(a)}, {"status", cx ? "counterexample" : "none"}};
      if (cx) {
        any = true;
        row["trace"] = cx->trace;
        if (cx->i >= 0) row["pair"] = Json::array({cx->i + 1, cx->j + 1});
        if (cx->dictator >= 0) row["dictator"] = cx->dictator + 1;
        Json ps = Json::array();
        for (const auto& p : cx->profiles) ps.push_back(profile_json(p));
        row["profiles"] = ps;
      }
      rows.push_back(row);
    }
    Json res{{"aggregation", o.aggregation}, {"n", o.agg_n}, {"voters", o.voters}, {"budget", o.budget}, {"axioms", rows}};
    return r.emit("axioms", res, any ? kExitViolation : kExitOk);
  }
  const auto rule = r.rule();
  std::vector<AxiomId> list;
  if (o.axiom == "core")
    list.assign(kCoreAxioms.begin(), kCoreAxioms.end());
  else if (o.axiom == "all")
    list = all_axiom_ids();
  else
    list = {parse_axiom(o.axiom)};
  FalsifyOptions fo;
  fo.budget = o.budget;
  fo.seed = o.seed;
  fo.jobs = o.jobs;
  fo.reference_first = o.paper;
  fo.min_n = o.min_n;
  fo.max_n = o.max_n;
  if (fo.min_n < 1 || fo.max_n < fo.min_n || fo.max_n > 12) throw InputError("--min-n/--max-n must satisfy 1 <= min <= max <= 12");
  Json rows = Json::array();
  bool any = false;
  for (auto a : list) {
    const auto cx = falsify_axiom(rule, a, fo);
    Json row{{"axiom", to_string(a)}, {"status", cx ? "counterexample" : "none"}};
    if (cx) {
      any = true;
      row["counterexample"] = counterexample_json(*cx);
    }
    rows.push_back(row);
  }
  Json res{{"rule", rule.name}, {"budget", o.budget}, {"axioms", rows}};
  return r.emit("axioms", res, any ? kExitViolation : kExitOk);
}

int cmd_stability(const Run& r) {
  const auto net = r.network();
  const auto s = r.subset(net);
  const auto delta = parse_rational(r.o.delta);
  if (delta < 0 || delta > 1) throw InputError("--delta must lie in [0,1]");
  const auto ab = alpha_beta(net, s);
  const bool b3ct = b3ct_rule()(net, s);
  Json res{{"set", labels_of(net, s)},
           {"delta", rational_str(delta)},
           {"alpha", rational_str(ab.alpha)},
           {"beta", ab.no_outsiders ? Json(nullptr) : Json(rational_str(ab.beta))},
           {"b3ct_member", b3ct},
           {"harmonious_member", harmonious_member(net, s)},
           {"delta_strong_b3ct", delta_strong_b3ct(net, s, delta)},
           {"delta_strong_harmonious", delta_strong_harmonious(net, s, delta)}};
  res["delta_stable_harmonious"] = delta <= Rational(1, 2) ? Json(delta_stable_harmonious(net, s, delta)) : Json(nullptr);
  if (b3ct) {
    const auto b = b3ct_perturbation_bounds(net, s);
    Json bj{{"certified", rational_str(b.certified)}, {"refuted", b.refuted ? Json(rational_str(*b.refuted)) : Json(nullptr)}};
    if (b.refutation) bj["refutation"] = network_to_json(*b.refutation);
    res["perturbation_bounds"] = bj;
  }
  if (!r.o.perturbed.empty()) {
    const auto alt = load_network(r.o.perturbed);
    const auto rep = perturbation_report(net, alt, s);
    Json dis = Json::object();
    for (MemberId v = 0; v < net.size(); ++v) dis[net.label(v)] = rep.disagreements[v];
    res["perturbation"] = Json{{"disagreements", dis},
                               {"max_fraction", rational_str(rep.max_fraction)},
                               {"membership_preserving", rep.membership_preserving},
                               {"within_delta", is_delta_perturbation(net, alt, s, delta)},
                               {"b3ct_member_after", b3ct_rule()(alt, s)}};
  }
  if (r.o.exhaustive) {
    const auto br = find_breaking_perturbation(net, s, delta, r.o.preserving);
    res["breaking_perturbation"] = br ? network_to_json(*br) : Json(nullptr);
  }
  return r.emit("stability", res, kExitOk);
}

int cmd_identify(const Run& r) {
  const auto net = r.network();
  const auto delta = parse_rational(r.o.delta);
  if (delta <= 0 || delta > Rational(1, 2)) throw InputError("--delta must lie in (0,1/2]");
  SampleMode mode;
  if (r.o.mode == "sampling")
    mode = SampleMode::Sampling;
  else if (r.o.mode == "enumeration")
    mode = SampleMode::Enumeration;
  else
    throw InputError("--mode must be sampling or enumeration");
  const auto sets = sample_stable_harmonious(net, delta, r.o.budget, r.o.seed, mode, r.o.jobs);
  Json list = Json::array();
  for (auto m : sets) list.push_back(labels_of(net, m));
  const double d = boost::rational_cast<double>(delta);
  Json res{{"delta", rational_str(delta)},
           {"mode", r.o.mode},
           {"samples", r.o.budget},
           {"sample_size", identification_sample_size(net.size(), d)},
           {"sets", list}};
  if (r.o.brute) {
    const auto all = brute_force_stable_harmonious(net, delta);
    Json bl = Json::array();
    for (auto m : all) bl.push_back(labels_of(net, m));
    res["brute_force"] = bl;
    res["subset_of_brute_force"] =
        std::all_of(sets.begin(), sets.end(), [&](SubsetMask m) { return std::find(all.begin(), all.end(), m) != all.end(); });
  }
  return r.emit("identify", res, kExitOk);
}

SatInstance load_cnf(const std::string& path) {
  if (path.empty()) throw InputError("no DIMACS file given");
  try {
    return parse_dimacs_string(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

int emit_generated(const Run& r, const std::string& what, const PreferenceNetwork& net, std::optional<SubsetMask> s,
                   const std::string& notes) {
  r.write_out(net);
  Json res{{"generator", what}, {"members", net.size()}};
  res["set"] = s ? labels_of(net, *s) : Json(nullptr);
  if (!notes.empty()) res["notes"] = notes;
  res["network"] = network_to_json(net);
  return r.emit("generate " + what, res, kExitOk);
}

int cmd_generate(const Run& r, const std::string& which) {
  const auto& o = r.o;
  if (which == "hero-sidekick") {
    if (o.duos < 1 || o.duos > 32) throw InputError("--duos must lie in [1,32]");
    return emit_generated(r, which, hero_sidekick(o.duos), std::nullopt, "");
  }
  if (which == "random") {
    if (o.n < 1 || o.n > SubsetMask::kMaxMembers) throw InputError("--n must lie in [1,64]");
    auto net = random_network(o.n, o.seed);
    std::optional<SubsetMask> s;
    if (!o.planted.empty()) {
      s = parse_subset(net, o.planted);
      net = planted_network(o.n, *s, o.loyalty, o.seed);
    }
    return emit_generated(r, which, net, s, "");
  }
  if (which == "from-sat") {
    const auto g = sat_to_network(load_cnf(o.input), o.seed);
    return emit_generated(r, which, g.network, g.s, g.notes);
  }
  if (which == "cubic-gadget") {
    const auto inst = load_cnf(o.input);
    const auto classes = partition_clauses(inst);
    const Rational lambda = o.lambda.empty() ? cubic_gadget_max_lambda(inst, static_cast<int>(classes.size()))
                                             : parse_rational(o.lambda);
    const auto g = cubic_1in3_gadget(inst, classes, lambda, o.seed);
    return emit_generated(r, which, g.network, g.s, g.notes + (g.notes.empty() ? "" : "; ") + "lambda " + rational_str(lambda));
  }
  // pad
  const auto net = r.network();
  const auto s = r.subset(net);
  const int p = o.pad > 0 ? o.pad : s.size();
  const auto g = pad_network(net, s, p, o.seed);
  return emit_generated(r, which, g.network, g.s, g.notes);
}

int cmd_oracle(const Run& r, const std::string& which) {
  const auto inst = load_cnf(r.o.input);
  const auto a = which == "sat" ? sat_assignment(inst) : one_in_three_assignment(inst);
  Json res{{"problem", which}, {"variables", inst.num_vars}, {"clauses", inst.clauses.size()}, {"satisfiable", a.has_value()}};
  if (a) {
    Json lits = Json::array();
    for (int v = 0; v < inst.num_vars; ++v) lits.push_back((*a)[v] ? v + 1 : -(v + 1));
    res["assignment"] = lits;
  }
  return r.emit("oracle " + which, res, a ? kExitOk : kExitViolation);
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Community rules, axioms and stability over preference networks", "prefnet"};
  app.set_version_flag("--version", std::string(PREFNET_VERSION));
  app.require_subcommand(1);

  const auto rule_help = [] {
    std::string s = "community rule (";
    for (const auto& n : rule_names()) s += (s.back() == '(' ? "" : ", ") + n;
    return s + ")";
  }();

  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "master seed")->capture_default_str();
    c->add_option("--jobs", o.jobs, "worker threads (0: PREFNET_JOBS or hardware)");
    c->add_option("--budget", o.budget, "trial or sample budget")->capture_default_str();
    c->add_flag("--force", o.force, "lift size guards on exhaustive searches");
    c->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    c->add_flag("--paper-instances", o.paper, "use the built-in worked examples");
    c->add_option("--instance", o.instance, "built-in network used with --paper-instances")->capture_default_str();
  };
  auto network_input = [&](CLI::App* c) { c->add_option("network", o.input, "network document (JSON)"); };
  auto rule_opts = [&](CLI::App* c) {
    c->add_option("--rule", o.rule, rule_help)->capture_default_str();
    c->add_option("-g", o.g, "slack for clique-g");
    c->add_option("--lambda", o.lambda, "lambda for lambda-harmonious (e.g. 1/2)");
  };

  auto* validate = app.add_subcommand("validate", "check a network document");
  common(validate);
  network_input(validate);

  auto* check = app.add_subcommand("check", "membership of one set");
  common(check);
  network_input(check);
  rule_opts(check);
  check->add_option("--set", o.set, "comma-separated member labels")->required();
  check->add_option("--property", o.properties, "also test a per-set property (GS, SA, WC, PE, Cq, OD, SmallWorld, WeakGS)");
  check->add_flag("--witness", o.witness, "report GS and SA witnesses");

  auto* enumerate = app.add_subcommand("enumerate", "every community of a rule");
  common(enumerate);
  network_input(enumerate);
  rule_opts(enumerate);
  enumerate->add_option("--cap", o.cap, "largest network enumerated without --force")->capture_default_str();

  auto* axioms = app.add_subcommand("axioms", "search for axiom counterexamples");
  common(axioms);
  rule_opts(axioms);
  axioms->add_option("--axiom", o.axiom, "axiom name, 'core' (the eight axioms) or 'all'")->capture_default_str();
  axioms->add_option("--min-n", o.min_n)->capture_default_str();
  axioms->add_option("--max-n", o.max_n)->capture_default_str();
  axioms->add_option("--aggregation", o.aggregation, "test U, ND, IIA of an aggregation (harmonious, b3ct, borda)");
  axioms->add_option("--n", o.agg_n, "candidates for aggregation axioms")->capture_default_str();
  axioms->add_option("--voters", o.voters, "voters for aggregation axioms")->capture_default_str();

  auto* stability = app.add_subcommand("stability", "perturbation and stability measures of one set");
  common(stability);
  network_input(stability);
  stability->add_option("--set", o.set, "comma-separated member labels")->required();
  stability->add_option("--delta", o.delta, "perturbation budget (e.g. 1/4)")->capture_default_str();
  stability->add_option("--perturbed", o.perturbed, "perturbed network document to compare");
  stability->add_flag("--exhaustive", o.exhaustive, "search all delta-perturbations for one that breaks B3CT (n <= 6)");
  stability->add_flag("--membership-preserving", o.preserving, "restrict --exhaustive to membership-preserving perturbations");

  auto* identify = app.add_subcommand("identify", "sample delta-stable harmonious communities");
  common(identify);
  network_input(identify);
  identify->add_option("--delta", o.delta)->capture_default_str();
  identify->add_option("--mode", o.mode)->check(CLI::IsMember({"sampling", "enumeration"}))->capture_default_str();
  identify->add_flag("--brute-force", o.brute, "compare with the exhaustive answer");

  auto* generate = app.add_subcommand("generate", "write instance networks");
  generate->require_subcommand(1);
  auto gen = [&](const std::string& name, const std::string& desc) {
    auto* c = generate->add_subcommand(name, desc);
    common(c);
    c->add_option("--out", o.out, "also write the network document here");
    return c;
  };
  auto* g_hero = gen("hero-sidekick", "heroes h1..hd and sidekicks k1..kd");
  g_hero->add_option("--duos", o.duos)->capture_default_str();
  auto* g_random = gen("random", "uniform random orders");
  g_random->add_option("--n", o.n)->capture_default_str();
  g_random->add_option("--planted", o.planted, "members that rank the set first with probability --loyalty");
  g_random->add_option("--loyalty", o.loyalty)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  auto* g_sat = gen("from-sat", "self-approval gadget of a 3-CNF");
  g_sat->add_option("cnf", o.input, "DIMACS file")->required();
  auto* g_cubic = gen("cubic-gadget", "1-in-3 gadget of a 3-CNF");
  g_cubic->add_option("cnf", o.input, "DIMACS file")->required();
  g_cubic->add_option("--lambda", o.lambda, "harmony level (default: largest admitted)");
  auto* g_pad = gen("pad", "pad a set with new members");
  network_input(g_pad);
  g_pad->add_option("--set", o.set)->required();
  g_pad->add_option("--p", o.pad, "members added (default |S|)");

  auto* oracle = app.add_subcommand("oracle", "brute-force satisfiability");
  oracle->require_subcommand(1);
  auto* o_sat = oracle->add_subcommand("sat", "3-SAT");
  auto* o_1in3 = oracle->add_subcommand("1in3", "1-in-3 SAT");
  for (auto* c : {o_sat, o_1in3}) {
    common(c);
    c->add_option("cnf", o.input, "DIMACS file")->required();
  }

  std::vector<const char*> cargv{"prefnet"};
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Run run{o, out, argv};
  try {
    if (*validate) return cmd_validate(run);
    if (*check) return cmd_check(run);
    if (*enumerate) return cmd_enumerate(run);
    if (*axioms) return cmd_axioms(run);
    if (*stability) return cmd_stability(run);
    if (*identify) return cmd_identify(run);
    for (auto* c : generate->get_subcommands())
      if (*c) return cmd_generate(run, c->get_name());
    if (*o_sat) return cmd_oracle(run, "sat");
    if (*o_1in3) return cmd_oracle(run, "1in3");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace prefnet::cli
