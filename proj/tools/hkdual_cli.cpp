#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hkdual/exterior.hpp"
#include "hkdual/intlin.hpp"
#include "hkdual/kummer.hpp"
#include "hkdual/lattice_bb.hpp"
#include "hkdual/ledger_io.hpp"
#include "hkdual/llv.hpp"
#include "hkdual/quotient.hpp"
#include "hkdual/torus.hpp"
#include "hkdual/verify.hpp"
#include "json.hpp"

using namespace hkdual;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  json result = json::object();
  std::string text;
  int exit_code = kExitOk;
  bool raw = false;  // text is a document of its own; --json does not wrap it
};

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const FinAbGroup& g) {
  return {{"freeRank", g.free_rank()},
          {"invariantFactors", to_json(g.invariant_factors())},
          {"text", g.to_string()}};
}

std::string tuple_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct MatrixSource {
  std::string file;
  std::string literal;

  void attach(CLI::App* cmd, const std::string& file_flag) {
    auto* f = cmd->add_option(file_flag, file, "matrix file: one row per line, whitespace-separated")
                  ->check(CLI::ExistingFile);
    auto* l = cmd->add_option("--matrix", literal, "inline literal such as [[0,1],[-1,0]]");
    f->excludes(l);
    l->excludes(f);
  }

  IntMatrix load() const {
    if (!file.empty()) return parse_matrix_text(read_file(file));
    if (!literal.empty()) return parse_matrix_literal(literal);
    throw std::invalid_argument("a matrix is required");
  }
};

struct ConfigArgs {
  std::optional<long> n;
  std::optional<long> d1;
  std::optional<long> d2;
  long s = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "half dimension n (defaults to d1·d2 - 1)");
    cmd->add_option("--d1", d1, "first polarization divisor (default 1)");
    cmd->add_option("--d2", d2, "second polarization divisor (default n+1)");
    cmd->add_option("--s", s, "twist parameter s (nonzero)")->capture_default_str();
  }

  ModuliConfig resolve() const {
    ModuliConfig cfg;
    cfg.s = s;
    if (d1 && d2) {
      cfg.d1 = *d1;
      cfg.d2 = *d2;
      cfg.n = n.value_or(*d1 * *d2 - 1);
    } else if (n && !d2) {
      cfg.d1 = d1.value_or(1);
      if ((*n + 1) % cfg.d1 != 0) throw std::invalid_argument("d1 does not divide n+1");
      cfg.d2 = (*n + 1) / cfg.d1;
      cfg.n = *n;
    } else {
      throw std::invalid_argument("give --n, or both --d1 and --d2");
    }
    cfg.validate();
    return cfg;
  }
};

json config_json(const ModuliConfig& c) {
  return {{"n", c.n}, {"d1", c.d1}, {"d2", c.d2}, {"s", c.s}, {"gcdCondition", c.gcd_condition()}};
}

// ---- subcommands ----------------------------------------------------------

Output cmd_verify(const std::optional<std::string>& only, bool json_mode) {
  Output out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_checks(only);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto summary = summarize(results);
  out.exit_code = summary.fail == 0 ? kExitOk : kExitCheckFailed;
  if (json_mode) {
    out.result = json::parse(checks_to_json(results));
    return out;
  }
  std::ostringstream os;
  std::string family;
  for (const auto& r : results) {
    if (r.family != family) {
      family = r.family;
      os << "[" << family << "]\n";
    }
    os << "  " << status_label(r.status) << "  " << r.name << "\n"
       << "      identity: " << r.reference << "\n"
       << "      expected: " << r.expected << "\n"
       << "      computed: " << r.computed << "\n";
  }
  os << summary.pass << " passed, " << summary.fail << " failed, " << summary.flagged << " flagged ("
     << std::fixed << std::setprecision(2) << secs << " s)\n";
  out.text = os.str();
  return out;
}

Output cmd_snf(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const auto coker = cokernel(a);
  Output out;
  out.result = {{"input", to_json(a)},
                {"diagonal", to_json(snf.diagonal())},
                {"U", to_json(snf.U)},
                {"D", to_json(snf.D)},
                {"V", to_json(snf.V)},
                {"cokernel", to_json(coker)}};
  std::ostringstream os;
  os << "diagonal  " << tuple_str(snf.diagonal()) << "\n"
     << "U         " << snf.U.to_string() << "\n"
     << "V         " << snf.V.to_string() << "\n"
     << "cokernel  " << coker.to_string() << "\n";
  out.text = os.str();
  return out;
}

Output cmd_polarization_type(const IntMatrix& form) {
  const auto nf = symplectic_normal_form(form);
  Output out;
  out.result = {{"type", to_json(nf.type)}, {"basis", to_json(nf.basis)}, {"reduced", to_json(nf.reduced)}};
  out.text = tuple_str(nf.type) + "\n";
  return out;
}

Output cmd_kernel(long d1, long d2, bool dual) {
  const auto phi = polarization_isogeny(PolarizedTorus::standard(d1, d2));
  const auto map = dual ? dual_polarization(phi, Integer(d1) * d2) : phi;
  const auto k = isogeny_kernel(map);
  Output out;
  out.result = {{"d1", d1}, {"d2", d2}, {"dual", dual}, {"matrix", to_json(map.matrix)}, {"kernel", to_json(k)}};
  out.text = k.to_string() + "\n";
  return out;
}

Output cmd_galois(const ModuliConfig& cfg) {
  const auto k = translation_subgroup(cfg);
  const auto coker = cokernel(minimal_isogeny_matrix(cfg));
  const auto rel = aut_rel(cfg);
  Output out;
  out.result = {{"config", config_json(cfg)},
                {"translationSubgroup", to_json(k)},
                {"cokernelMinimalIsogeny", to_json(coker)},
                {"relativeAutomorphisms", to_json(rel)}};
  std::ostringstream os;
  os << "K = Gal(φ)        " << k.to_string() << "\n"
     << "coker M_φ         " << coker.to_string() << "\n"
     << "Aut°(X/B) = ker φ̌ " << rel.to_string() << "\n";
  if (!cfg.gcd_condition()) os << "note: gcd(d1, s) != 1\n";
  out.text = os.str();
  return out;
}

Output cmd_factorization(const ModuliConfig& cfg) {
  const auto m_phi = minimal_isogeny_matrix(cfg);
  const auto m_psi = complementary_isogeny_matrix(cfg);
  const auto product = m_phi * m_psi;
  const bool ok = verify_factorization(cfg, m_psi);
  Output out;
  out.result = {{"config", config_json(cfg)},
                {"Mphi", to_json(m_phi)},
                {"Mpsi", to_json(m_psi)},
                {"product", to_json(product)},
                {"holds", ok}};
  std::ostringstream os;
  os << "M_φ       " << m_phi.to_string() << "\n"
     << "M_ψ       " << m_psi.to_string() << "\n"
     << "M_φ·M_ψ   " << product.to_string() << "\n"
     << (ok ? "M_φ·M_ψ = (n+1)·I_8 holds\n" : "M_φ·M_ψ != (n+1)·I_8\n");
  out.text = os.str();
  out.exit_code = ok ? kExitOk : kExitCheckFailed;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

Output cmd_fujiki(const std::string& lattice_name, const std::string& gram_file, const std::string& c_text,
                  int half_dim, const std::string& vectors, const std::vector<std::string>& defines) {
  std::optional<BBLattice> lattice;
  std::map<std::string, IntVector> names;
  if (!gram_file.empty()) {
    if (c_text.empty() || half_dim < 1) throw std::invalid_argument("--gram needs --c and --half-dim");
    Rational c(c_text);
    c.canonicalize();
    lattice.emplace(parse_matrix_text(read_file(gram_file)), c, half_dim, "custom");
    for (std::size_t i = 0; i < lattice->rank(); ++i)
      names["b" + std::to_string(i + 1)] = lattice->basis_vector(i);
  } else if (lattice_name == "kum2") {
    lattice.emplace(lattices::kum2());
    const char* labels[] = {"e1", "f1", "e2", "f2", "e3", "f3", "g"};
    for (std::size_t i = 0; i < 7; ++i) names[labels[i]] = lattice->basis_vector(i);
    names["h"] = make_vector({1, 0, 0, 0, 0, 0, 0});
    names["x"] = make_vector({0, 1, 0, 0, 0, 0, 1});
  } else {
    throw std::invalid_argument("unknown lattice '" + lattice_name + "' (known: kum2; or use --gram)");
  }
  for (const auto& def : defines) {
    const auto eq = def.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--define expects name=c1,c2,...");
    IntVector v;
    for (const auto& part : split(def.substr(eq + 1), ',')) v.emplace_back(parse_long(part));
    if (v.size() != lattice->rank()) throw std::invalid_argument("defined vector has the wrong length");
    names[def.substr(0, eq)] = v;
  }
  std::vector<IntVector> args;
  json arg_json = json::array();
  for (const auto& name : split(vectors, ',')) {
    const auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown vector name '" + name + "'");
    args.push_back(it->second);
    arg_json.push_back({{"name", name}, {"coords", to_json(it->second)}});
  }
  const auto value = fujiki_product(*lattice, args, kernels::Exec::parallel);
  Output out;
  out.result = {{"lattice", lattice->name()},
                {"fujikiConstant", lattice->fujiki_constant().get_str()},
                {"halfDim", lattice->half_dim()},
                {"arguments", arg_json},
                {"value", value.get_str()}};
  std::string text = "∫ = " + value.get_str() + "\n";
  bool all_equal = true;
  for (const auto& a : args) all_equal = all_equal && a == args.front();
  if (all_equal) {
    const auto closed = fujiki_closed_form(*lattice, args.front());
    out.result["closedForm"] = closed.get_str();
    text += "closed form c·(2n)!/(2^n n!)·q(x)^n = " + closed.get_str() + "\n";
  }
  out.text = text;
  return out;
}

Output cmd_cup_l(long d1, long d2) {
  const auto l = ample_class(d1, d2);
  const auto cup = cup_with_l_matrix(l);
  const auto dual = dual_phi_matrix(d1, d2);
  Output out;
  json images = json::array();
  std::ostringstream os;
  os << "l = " << l.to_string() << "\n";
  for (int i = 0; i < 4; ++i) {
    const auto img = wedge(l, ExtClass::basis(2, {i}));
    images.push_back(img.to_string());
    os << "  e" << (i + 1) << " ↦ " << img.to_string() << "\n";
  }
  const bool equal = cup == dual;
  os << "matrix    " << cup.to_string() << "\n"
     << "φ̌         " << dual.to_string() << "\n"
     << (equal ? "l ∪ - equals φ̌\n" : "l ∪ - differs from φ̌\n")
     << "∫l²       " << self_intersection(l).get_str() << "\n";
  out.result = {{"d1", d1},
                {"d2", d2},
                {"l", l.to_string()},
                {"images", images},
                {"matrix", to_json(cup)},
                {"dualPolarization", to_json(dual)},
                {"equalsDual", equal},
                {"selfIntersection", to_json(self_intersection(l))}};
  out.text = os.str();
  out.exit_code = equal ? kExitOk : kExitCheckFailed;
  return out;
}

FixedPointLedger ledger_or_model(const std::string& path) {
  return path.empty() ? kummer_translation_model() : load_ledger(path);
}

Output cmd_orbits(const std::string& ledger_path, bool involutions, long n) {
  Output out;
  if (involutions) {
    const auto inv = involution_orbit_count(n);
    json sizes = inv.orbit_sizes;
    out.result = {{"n", n}, {"involutions", inv.involutions}, {"orbits", inv.orbits}, {"orbitSizes", sizes}};
    out.text = std::to_string(inv.involutions) + " involutions in " + std::to_string(inv.orbits) +
               " conjugacy classes\n";
    return out;
  }
  const auto ledger = ledger_or_model(ledger_path);
  if (!ledger.action) throw std::invalid_argument("ledger has no explicit action");
  const auto dec = orbit_count(*ledger.action);
  json hist = json::object();
  std::ostringstream os;
  os << ledger.name << ": " << ledger.action->set_size() << " points, " << dec.orbit_count << " orbits\n";
  for (const auto& [size, count] : dec.size_histogram) {
    hist[std::to_string(size)] = count;
    os << "  " << count << " orbits of size " << size << "\n";
  }
  out.result = {{"ledger", ledger.name},
                {"points", ledger.action->set_size()},
                {"orbits", dec.orbit_count},
                {"sizeHistogram", hist}};
  out.text = os.str();
  return out;
}

json optional_json(const std::optional<Integer>& v) { return v ? to_json(*v) : json(nullptr); }

Output cmd_dual_kummer_report(const std::string& ledger_path) {
  const auto ledger = ledger_or_model(ledger_path);
  const auto rep = singularity_report(ledger);
  const auto declared = singularity_report(kummer_declared_ledger());
  const auto group_order = Integer(static_cast<unsigned long>(ledger.group().order()));
  std::optional<Rational> e_orb;
  if (ledger.euler_total) e_orb = orbifold_euler(ledger, *ledger.euler_total, group_order);
  const auto dual = betti_table(llv::dual_kum2_decomposition());
  std::vector<std::string> local;
  for (const auto& t : symplectic_cyclic_local_types(3, 4)) local.push_back(local_type_label(3, t));

  Output out;
  json per_stab = json::object();
  for (const auto& [k, v] : rep.per_stabilizer) per_stab[k] = v;
  out.result = {
      {"ledger", ledger.name},
      {"stepwise",
       {{"first", optional_json(rep.stepwise_first)},
        {"identified", optional_json(rep.stepwise_identified)},
        {"new", optional_json(rep.stepwise_new)},
        {"count", optional_json(rep.stepwise_count)}}},
      {"orbitCount", optional_json(rep.burnside_count)},
      {"orbitCountSource", rep.burnside_source},
      {"perStabilizer", per_stab},
      {"declaredStepwiseCount", optional_json(declared.stepwise_count)},
      {"singularityStatus", "FLAGGED"},
      {"orbifoldEuler", e_orb ? json(e_orb->get_str()) : json(nullptr)},
      {"dualBetti", to_json(dual.betti)},
      {"dualEuler", to_json(dual.euler)},
      {"localTypes", local},
      {"notes", rep.notes}};
  std::ostringstream os;
  auto str = [](const std::optional<Integer>& v) { return v ? v->get_str() : std::string("n/a"); };
  os << "ledger                 " << ledger.name << "\n"
     << "stepwise count         " << str(rep.stepwise_first) << " -> " << str(rep.stepwise_identified)
     << " identified + " << str(rep.stepwise_new) << " new = " << str(rep.stepwise_count) << "\n"
     << "orbit count            " << str(rep.burnside_count) << " (" << rep.burnside_source << ")\n";
  for (const auto& [k, v] : rep.per_stabilizer) os << "  stabilizer " << k << ": " << v << "\n";
  os << "declared stepwise      " << str(declared.stepwise_count) << "\n"
     << "singular points        FLAGGED: declared stepwise " << str(declared.stepwise_count)
     << " vs orbit count " << str(rep.burnside_count) << "\n"
     << "orbifold Euler         " << (e_orb ? e_orb->get_str() : std::string("n/a")) << "\n"
     << "dual Betti numbers     " << tuple_str(dual.betti) << ", e = " << dual.euler.get_str() << "\n"
     << "local types            ";
  for (std::size_t i = 0; i < local.size(); ++i) os << (i ? ", " : "") << local[i];
  os << "\n";
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  out.text = os.str();
  return out;
}

HighestWeight parse_weight(int so_dim, const std::string& text) {
  if (so_dim < 3) throw std::invalid_argument("--so must be at least 3");
  std::vector<long> doubled;
  for (const auto& part : split(text, ',')) {
    const auto slash = part.find('/');
    if (slash == std::string::npos) {
      doubled.push_back(2 * parse_long(part));
    } else {
      if (part.substr(slash + 1) != "2") throw std::invalid_argument("only halves are allowed in weights");
      doubled.push_back(parse_long(part.substr(0, slash)));
    }
  }
  const auto series = so_dim % 2 == 1 ? Series::B : Series::D;
  if (doubled.size() != static_cast<std::size_t>(so_dim / 2))
    throw std::invalid_argument("weight needs " + std::to_string(so_dim / 2) + " entries");
  return HighestWeight(series, doubled);
}

json betti_json(const BettiTable& t) {
  return {{"betti", to_json(t.betti)}, {"total", to_json(t.total)}, {"euler", to_json(t.euler)}};
}

Output cmd_llv(int so_dim, const std::string& weight, long b2, long n) {
  Output out;
  std::ostringstream os;
  if (!weight.empty()) {
    const auto w = parse_weight(so_dim, weight);
    const auto d = weyl_dim(w);
    out.result["weight"] = w.to_string();
    out.result["dimension"] = to_json(d);
    os << "dim " << w.to_string() << " = " << d.get_str() << "\n";
  }
  if (b2 > 0) {
    const auto prof = verbitsky_profile(b2, n);
    json p = json::object();
    os << "Verbitsky component, b2 = " << b2 << ", n = " << n << ":";
    for (const auto& [deg, dim] : prof.dims) {
      p[std::to_string(deg)] = to_json(dim);
      os << " H^" << deg << ":" << dim.get_str();
    }
    os << "  (total " << prof.total().get_str() << ")\n";
    out.result["verbitskyProfile"] = p;
  }
  if (weight.empty() && b2 <= 0) {
    const auto kum = betti_table(llv::kum2_decomposition());
    const auto dual = betti_table(llv::dual_kum2_decomposition());
    out.result["kum2"] = betti_json(kum);
    out.result["dualKum2"] = betti_json(dual);
    os << "Kum₂   V_(2) ⊕ 80Q ⊕ V_spin   b = " << tuple_str(kum.betti) << "  total " << kum.total.get_str()
       << "  e = " << kum.euler.get_str() << "\n"
       << "dual   V_(2) ⊕ 8Q ⊕ V_spin    b = " << tuple_str(dual.betti) << "  total " << dual.total.get_str()
       << "  e = " << dual.euler.get_str() << "\n";
  }
  out.text = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for hyper-Kähler duals of Lagrangian fibrations"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a JSON document instead of a table");

  std::function<Output()> action;

  auto* verify = app.add_subcommand("verify-paper", "run every reference identity check");
  std::string only;
  verify->add_option("--only", only, "run a single family")
      ->check(CLI::IsMember(check_families()));
  verify->add_flag("--json", json_mode, "emit JSON");
  verify->callback([&] {
    action = [&] { return cmd_verify(only.empty() ? std::nullopt : std::optional(only), json_mode); };
  });

  auto* snf = app.add_subcommand("snf", "Smith normal form and cokernel of an integer matrix");
  MatrixSource snf_src;
  snf_src.attach(snf, "--file");
  snf->add_flag("--json", json_mode, "emit JSON");
  snf->callback([&] { action = [&] { return cmd_snf(snf_src.load()); }; });

  auto* ptype = app.add_subcommand("polarization-type", "type of an alternating integral form");
  MatrixSource form_src;
  form_src.attach(ptype, "--form");
  ptype->add_flag("--json", json_mode, "emit JSON");
  ptype->callback([&] { action = [&] { return cmd_polarization_type(form_src.load()); }; });

  auto* kernel = app.add_subcommand("kernel", "kernel of the (dual) polarization isogeny");
  long k_d1 = 1, k_d2 = 1;
  bool k_dual = false;
  kernel->add_option("--d1", k_d1)->required();
  kernel->add_option("--d2", k_d2)->required();
  kernel->add_flag("--dual", k_dual, "use the dual polarization");
  kernel->add_flag("--json", json_mode, "emit JSON");
  kernel->callback([&] { action = [&] { return cmd_kernel(k_d1, k_d2, k_dual); }; });

  auto* galois = app.add_subcommand("galois", "translation subgroup K = Gal(φ)");
  ConfigArgs galois_cfg;
  galois_cfg.attach(galois);
  galois->add_flag("--json", json_mode, "emit JSON");
  galois->callback([&] { action = [&] { return cmd_galois(galois_cfg.resolve()); }; });

  auto* fact = app.add_subcommand("factorization", "check M_φ·M_ψ = (n+1)·I_8");
  ConfigArgs fact_cfg;
  fact_cfg.attach(fact);
  fact->add_flag("--json", json_mode, "emit JSON");
  fact->callback([&] { action = [&] { return cmd_factorization(fact_cfg.resolve()); }; });

  auto* fujiki = app.add_subcommand("fujiki", "polarized Fujiki product of 2n classes");
  std::string lattice = "kum2", gram_file, c_text, vectors = "h,h,x,x";
  int half_dim = 0;
  std::vector<std::string> defines;
  fujiki->add_option("--lattice", lattice, "named lattice")->capture_default_str();
  fujiki->add_option("--gram", gram_file, "Gram matrix file (basis names b1, b2, ...)")->check(CLI::ExistingFile);
  fujiki->add_option("--c", c_text, "Fujiki constant for --gram, e.g. 3 or 1/3");
  fujiki->add_option("--half-dim", half_dim, "n for --gram");
  fujiki->add_option("--vectors", vectors, "comma-separated vector names")->capture_default_str();
  fujiki->add_option("--define", defines, "extra vector name=c1,c2,...")->delimiter(';');
  fujiki->add_flag("--json", json_mode, "emit JSON");
  fujiki->callback([&] {
    action = [&] { return cmd_fujiki(lattice, gram_file, c_text, half_dim, vectors, defines); };
  });

  auto* cup = app.add_subcommand("cup-l", "matrix of l ∪ - : H^1 → H^3");
  long c_d1 = 1, c_d2 = 3;
  cup->add_option("--d1", c_d1)->capture_default_str();
  cup->add_option("--d2", c_d2)->capture_default_str();
  cup->add_flag("--json", json_mode, "emit JSON");
  cup->callback([&] { action = [&] { return cmd_cup_l(c_d1, c_d2); }; });

  auto* orbits = app.add_subcommand("orbits", "orbit decomposition of a fixed-point ledger action");
  std::string orbit_ledger;
  bool orbit_inv = false;
  long orbit_n = 2;
  orbits->add_option("--ledger", orbit_ledger, "ledger file (default: translation model)")
      ->check(CLI::ExistingFile);
  orbits->add_flag("--involutions", orbit_inv, "count involution classes in Z/2 ⋉ K instead");
  orbits->add_option("--n", orbit_n, "n for --involutions")->capture_default_str();
  orbits->add_flag("--json", json_mode, "emit JSON");
  orbits->callback([&] { action = [&] { return cmd_orbits(orbit_ledger, orbit_inv, orbit_n); }; });

  auto* report = app.add_subcommand("dual-kummer-report", "singularities and invariants of Kum₂/G");
  std::string report_ledger;
  report->add_option("--ledger", report_ledger, "ledger file (default: translation model)")
      ->check(CLI::ExistingFile);
  std::string emit_ledger;
  report->add_option("--emit-ledger", emit_ledger, "print a built-in ledger as a ledger file and exit")
      ->check(CLI::IsMember({"model", "declared"}));
  report->add_flag("--json", json_mode, "emit JSON");
  report->callback([&] {
    action = [&] {
      if (emit_ledger.empty()) return cmd_dual_kummer_report(report_ledger);
      Output out;
      out.text = ledger_to_text(emit_ledger == "model" ? kummer_translation_model() : kummer_declared_ledger());
      out.raw = true;
      return out;
    };
  });

  auto* llv_cmd = app.add_subcommand("llv", "Weyl dimensions and Betti tables of LLV decompositions");
  int so_dim = 9;
  std::string weight;
  long b2 = 0, llv_n = 2;
  llv_cmd->add_option("--so", so_dim, "orthogonal algebra so(N)")->capture_default_str();
  llv_cmd->add_option("--weight", weight, "highest weight, e.g. 2,0,0,0 or 1/2,1/2,1/2,1/2");
  llv_cmd->add_option("--b2", b2, "print the Verbitsky profile for this b2");
  llv_cmd->add_option("--n", llv_n, "half dimension for --b2")->capture_default_str();
  llv_cmd->add_flag("--json", json_mode, "emit JSON");
  llv_cmd->callback([&] { action = [&] { return cmd_llv(so_dim, weight, b2, llv_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  try {
    out = action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  if (json_mode && !out.raw) {
    json doc = out.result;
    if (!doc.contains("schemaVersion")) {
      doc = json{{"schemaVersion", kReportSchemaVersion},
                 {"command", app.get_subcommands().front()->get_name()},
                 {"result", out.result}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}
