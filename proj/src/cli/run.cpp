#include "heckerep/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "heckerep/cli/output.hpp"
#include "heckerep/errors.hpp"
#include "heckerep/exactnum/serialize.hpp"
#include "heckerep/recoupling/evaluator.hpp"
#include "heckerep/recoupling/verlinde.hpp"
#include "heckerep/rep_genus1/modular_data.hpp"
#include "heckerep/rep_genus2/certificates.hpp"
#include "heckerep/rep_genus2/matrices.hpp"
#include "heckerep/sl2_hecke/sl2.hpp"
#include "heckerep/sl2_hecke/thurston.hpp"
#include "heckerep/spin/spin.hpp"

namespace heckerep::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

TwistConvention twist_of(const RunConfig& c) {
  if (c.twist == "plus") return TwistConvention::IPlus2;
  if (c.twist == "minus") return TwistConvention::IMinus2;
  throw UsageError("unknown twist convention '" + c.twist + "' (plus, minus)");
}

TheoryParams params_for(const RunConfig& c, int level, std::optional<long> root) {
  if (level < 1) throw UsageError("level must be >= 1");
  const TwistConvention tw = twist_of(c);
  return root ? TheoryParams::at_root(level, *root, tw) : TheoryParams::unitary(level, tw);
}

std::vector<int> levels_of(const RunConfig& c) {
  return c.levels.empty() ? std::vector<int>{c.level} : c.levels;
}

json params_json(const TheoryParams& p) {
  return {{"level", p.level},
          {"root_exponent", p.root_exponent},
          {"root_order", p.root_order()},
          {"twist", to_string(p.twist)}};
}

std::string triple_label(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

json surd_json(const SurdEntry& e) {
  json j = {{"square", to_json(e.square)}, {"sign", e.sign}, {"approx", e.approx()}};
  j["exact"] = e.exact ? to_json(*e.exact) : json(nullptr);
  return j;
}

json surd_matrix_json(const SurdMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(surd_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Table surd_table(const std::string& title, const SurdMatrix& m, int precision) {
  Table t{title, {""}, {}};
  for (std::size_t j = 0; j < m.cols(); ++j) t.header.push_back(std::to_string(j));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(decimal(m(i, j).approx(), precision));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------

int cmd_dims(const RunConfig& c, Output& out) {
  const std::vector<int> levels = c.levels.empty() ? std::vector<int>{3, 5, 7, 9, 11, 13} : c.levels;
  if (c.genus < 1) throw UsageError("genus must be >= 1");
  Table t{"dimensions at genus " + std::to_string(c.genus), {"r", "d_r(g)"}, {}};
  if (c.genus == 2) t.header.push_back("basis size");
  json rows = json::array();
  for (int r : levels) {
    if (r < 1) throw UsageError("level must be >= 1");
    const Integer d = verlinde_dim(r, c.genus);
    json row = {{"level", r}, {"dimension", to_json(d)}};
    std::vector<std::string> cells{std::to_string(r), d.get_str()};
    if (c.genus == 2) {
      const std::size_t n = enumerate_basis(TheoryParams::unitary(r)).size();
      row["basis_size"] = n;
      cells.push_back(std::to_string(n));
    }
    rows.push_back(std::move(row));
    t.rows.push_back(std::move(cells));
  }
  out.doc = {{"genus", c.genus}, {"dimensions", std::move(rows)}};
  out.tables.push_back(std::move(t));
  return kOk;
}

int cmd_coefficients(const RunConfig& c, Output& out) {
  const TheoryParams p = params_for(c, c.level, c.root);
  const auto rc = recoupling_for(p);
  const auto& colors = rc->colors();
  json deltas = json::array(), twists = json::array(), thetas = json::array(), sixjs = json::array();
  Table td{"loop values and twists", {"i", "Delta_i", "theta_i"}, {}};
  for (int i : colors) {
    deltas.push_back({{"i", i}, {"value", to_json(rc->delta(i))}});
    twists.push_back({{"i", i}, {"value", to_json(rc->twist(i))}});
    td.rows.push_back({std::to_string(i), decimal(rc->delta(i), c.precision), decimal(rc->twist(i), c.precision)});
  }
  Table tt{"theta nets", {"a", "b", "c", "Theta"}, {}};
  for (int a : colors)
    for (int b : colors)
      for (int k : colors) {
        if (a > b || b > k || !rc->admissible(a, b, k)) continue;
        const CycNumber v = rc->theta_net(a, b, k);
        thetas.push_back({{"triple", {a, b, k}}, {"value", to_json(v)}});
        tt.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(k), decimal(v, c.precision)});
      }
  Table ts{"6j symbols", {"a", "b", "i", "c", "d", "j", "Tet", "6j"}, {}};
  for (int a : colors)
    for (int b : colors)
      for (int cc : colors)
        for (int d : colors)
          for (int i : colors) {
            if (!rc->admissible(a, d, i) || !rc->admissible(b, cc, i)) continue;
            for (int j : colors) {
              if (!rc->admissible(a, b, j) || !rc->admissible(cc, d, j)) continue;
              const CycNumber tet = rc->tet_kl(a, b, i, cc, d, j);
              const CycNumber s = rc->sixj(a, b, i, cc, d, j);
              sixjs.push_back({{"labels", {a, b, i, cc, d, j}}, {"tet", to_json(tet)}, {"sixj", to_json(s)}});
              ts.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(i), std::to_string(cc),
                                 std::to_string(d), std::to_string(j), decimal(tet, c.precision),
                                 decimal(s, c.precision)});
            }
          }
  out.doc = {{"params", params_json(p)}, {"delta", std::move(deltas)}, {"theta", std::move(twists)},
             {"theta_net", std::move(thetas)}, {"tet_sixj", std::move(sixjs)}};
  out.tables = {std::move(td), std::move(tt), std::move(ts)};
  return kOk;
}

int cmd_modular_data(const RunConfig& c, Output& out) {
  const TheoryParams p = params_for(c, c.level, c.root);
  const ModularData m = modular_data(p);
  const GlobalConstants& g = recoupling_for(p)->global_constants();
  out.doc = {{"params", params_json(p)},
             {"colors", m.colors},
             {"s_tilde", to_json(m.s_tilde)},
             {"s", surd_matrix_json(m.s)},
             {"t", to_json(m.t)},
             {"d_squared", to_json(m.d_squared)},
             {"p_plus", to_json(m.p_plus)},
             {"p_minus", to_json(m.p_minus)},
             {"kappa_squared", to_json(g.kappa_squared)}};
  out.tables.push_back(matrix_table("S~", m.s_tilde, c.precision));
  out.tables.push_back(surd_table("S", m.s, c.precision));
  out.tables.push_back(matrix_table("T", m.t, c.precision));
  out.tables.push_back({"constants",
                        {"name", "value"},
                        {{"D^2", decimal(m.d_squared, c.precision)},
                         {"P+", decimal(m.p_plus, c.precision)},
                         {"P-", decimal(m.p_minus, c.precision)},
                         {"kappa^2", decimal(g.kappa_squared, c.precision)}}});
  return kOk;
}

int cmd_genus2_matrices(const RunConfig& c, Output& out) {
  const TheoryParams p = params_for(c, c.level, c.root);
  const auto rep = genus2_rep(p);
  json basis = json::array();
  for (const auto& t : rep->basis.triples) basis.push_back(t);
  out.doc = {{"params", params_json(p)}, {"basis", std::move(basis)}, {"t", to_json(rep->t)}};
  if (c.raw) {
    out.doc["jtilde"] = to_json(rep->jtilde);
    out.doc["j"] = to_json(rep->j_plain);
    out.tables.push_back(matrix_table("J~", rep->jtilde, c.precision));
    out.tables.push_back(matrix_table("J (non-normalized)", rep->j_plain, c.precision));
  } else {
    const SurdMatrix j = j_unitary(p, c.exact_roots);
    out.doc["j"] = surd_matrix_json(j);
    out.tables.push_back(surd_table("J", j, c.precision));
  }
  out.tables.push_back(matrix_table("T", rep->t, c.precision));
  Table b{"basis", {"index", "(i,j,k)"}, {}};
  for (std::size_t n = 0; n < rep->basis.size(); ++n) b.rows.push_back({std::to_string(n), triple_label(rep->basis[n])});
  out.tables.push_back(std::move(b));
  return kOk;
}

int cmd_verify(const RunConfig& c, Output& out) {
  if (c.genus_filter && *c.genus_filter != 1 && *c.genus_filter != 2) throw UsageError("verify supports genus 1 and 2");
  bool ok = true;
  json runs = json::array();
  for (int r : levels_of(c)) {
    const TheoryParams p = params_for(c, r, c.root);
    for (int g : {1, 2}) {
      if (c.genus_filter && *c.genus_filter != g) continue;
      const RelationReport rep = g == 1 ? verify_genus1_relations(p) : verify_genus2_relations(p);
      ok = ok && rep.all_pass();
      json entry = {{"genus", g}, {"params", params_json(p)}, {"all_pass", rep.all_pass()},
                    {"relations", report_json(rep)}, {"notes", rep.notes}};
      runs.push_back(std::move(entry));
      out.tables.push_back(report_table("genus " + std::to_string(g) + ", r = " + std::to_string(r) +
                                            ", k = " + std::to_string(p.root_exponent),
                                        rep));
    }
  }
  out.doc = {{"all_pass", ok}, {"runs", std::move(runs)}};
  return ok ? kOk : kVerificationFailed;
}

int cmd_trace_table(const RunConfig& c, Output& out) {
  const std::vector<int> levels = c.levels.empty() ? std::vector<int>{3, 5, 7, 9, 11, 13} : c.levels;
  const long k = c.root.value_or(1);
  Table t{"tr(J T J T^-1), A = zeta_N^" + std::to_string(k),
          {"r", "trace", "d_r(2)", "tr > d_r(2)", "largest |conjugate|", "at exponent"},
          {}};
  json rows = json::array();
  for (int r : levels) {
    const TheoryParams p = params_for(c, r, k);
    const TraceCertificate cert = trace_certificate(p);
    const bool exceeds = cert.value > cert.dimension.get_d();
    rows.push_back({{"level", r},
                    {"root_exponent", k},
                    {"trace", to_json(cert.trace)},
                    {"value", cert.value},
                    {"dimension", to_json(cert.dimension)},
                    {"exceeds_dimension", exceeds},
                    {"best_exponent", cert.best_exponent},
                    {"best_magnitude", cert.best_magnitude},
                    {"certificate_fires", cert.fires}});
    t.rows.push_back({std::to_string(r), decimal(cert.trace, c.precision), cert.dimension.get_str(),
                      exceeds ? "yes" : "no", decimal(cert.best_magnitude, c.precision),
                      std::to_string(cert.best_exponent)});
  }
  out.doc = {{"root_exponent", k}, {"twist", c.twist}, {"rows", std::move(rows)}};
  out.tables.push_back(std::move(t));
  return kOk;
}

int cmd_infinite_image(const RunConfig& c, Output& out) {
  const TheoryParams p = params_for(c, c.level, c.root);
  std::optional<IntPolynomial> designated;
  if (!c.factor.empty()) designated = IntPolynomial(std::vector<Integer>(c.factor.begin(), c.factor.end()));
  const InfiniteImageReport r = infinite_image_certificate(p, designated);
  json doc = {{"params", params_json(p)}, {"verdict", r.verdict}, {"notes", r.notes}};
  Table t{"infinite image certificate, r = " + std::to_string(p.level), {"item", "value"}, {}};
  doc["trace"] = {{"trace", to_json(r.trace.trace)},
                  {"value", r.trace.value},
                  {"dimension", to_json(r.trace.dimension)},
                  {"best_exponent", r.trace.best_exponent},
                  {"best_magnitude", r.trace.best_magnitude},
                  {"fires", r.trace.fires}};
  t.rows.push_back({"trace", decimal(r.trace.trace, c.precision)});
  t.rows.push_back({"d_r(2)", r.trace.dimension.get_str()});
  t.rows.push_back({"trace certificate", r.trace.fires ? "fires" : "silent"});
  std::string certificate;
  if (r.minpoly) {
    const MinPolyCertificate& m = *r.minpoly;
    json mj = {{"rational_char_poly", to_json(m.rational_char_poly)},
               {"non_cyclotomic", to_json(m.non_cyclotomic)},
               {"fires", m.fires}};
    mj["designated"] = m.designated ? to_json(*m.designated) : json(nullptr);
    if (m.designated) {
      mj["designated_divides_rational"] = m.designated_divides_rational;
      mj["designated_divides_field"] = m.designated_divides_field;
      mj["field_gcd_degree"] = m.field_gcd_degree;
      mj["designated_is_cyclotomic"] = m.designated_is_cyclotomic;
    }
    doc["minpoly"] = std::move(mj);
    t.rows.push_back({"non-cyclotomic factor", m.non_cyclotomic.degree() > 0 ? m.non_cyclotomic.to_string() : "none"});
    if (m.designated) {
      t.rows.push_back({"designated factor", m.designated->to_string()});
      t.rows.push_back({"divides rational char poly", m.designated_divides_rational ? "yes" : "no"});
      t.rows.push_back({"gcd degree over the field", std::to_string(m.field_gcd_degree)});
      t.rows.push_back({"is cyclotomic", m.designated_is_cyclotomic ? "yes" : "no"});
    }
    if (m.fires) {
      const std::string poly = m.designated && m.designated_divides_rational && !m.designated_is_cyclotomic
                                   ? m.designated->to_string()
                                   : m.non_cyclotomic.to_string();
      certificate = "minimal polynomial " + poly + " non-cyclotomic";
    }
  }
  if (certificate.empty() && r.trace.fires)
    certificate = "some Galois conjugate of the trace exceeds the dimension " + r.trace.dimension.get_str();
  doc["certificate"] = certificate.empty() ? json(nullptr) : json(certificate);
  t.rows.push_back({"verdict", r.verdict});
  if (!certificate.empty()) t.rows.push_back({"certificate", certificate});
  for (const auto& n : r.notes) t.rows.push_back({"note", n});
  out.doc = std::move(doc);
  out.tables.push_back(std::move(t));
  return kOk;
}

json sl2_json(const SL2Matrix& m) {
  return {{"a", to_json(m.a.value())}, {"b", to_json(m.b.value())}, {"c", to_json(m.c.value())},
          {"d", to_json(m.d.value())}, {"approx", m.to_double()}};
}

Table sl2_table(const std::string& title, const SL2Matrix& m, int precision) {
  return {title,
          {"", "0", "1"},
          {{"0", decimal(m.a.to_double(), precision), decimal(m.b.to_double(), precision)},
           {"1", decimal(m.c.to_double(), precision), decimal(m.d.to_double(), precision)}}};
}

int cmd_hecke_sl2(const RunConfig& c, Output& out) {
  if (c.q < 3 || c.q % 2 == 0) throw UsageError("q must be odd and >= 3");
  const HeckeGenerators gens = hecke_generators(c.q);
  const RelationReport pres = verify_presentation(c.q);
  json doc = {{"q", c.q}, {"lambda", to_json(gens.lambda.value())}};
  doc["presentation"] = report_json(pres);
  if (!c.word.empty()) {
    const Word w = parse_word(c.word);
    const SL2Matrix m = eval_word(w, gens);
    const Sl2Class cls = classify(m);
    doc["word"] = to_string(w);
    doc["matrix"] = sl2_json(m);
    doc["trace"] = to_json(m.trace().value());
    doc["class"] = to_string(cls);
    out.tables.push_back(sl2_table("word " + to_string(w), m, c.precision));
    out.tables.push_back({"properties",
                          {"item", "value"},
                          {{"trace", decimal(m.trace().to_double(), c.precision)}, {"class", to_string(cls)}}});
  }
  out.tables.push_back(report_table("presentation, q = " + std::to_string(c.q), pres));
  out.doc = std::move(doc);
  return pres.all_pass() ? kOk : kVerificationFailed;
}

int cmd_thurston(const RunConfig& c, Output& out) {
  MulticurveData data;
  if (!c.graph_path.empty()) {
    std::ifstream in(c.graph_path);
    if (!in) throw UsageError("cannot open graph file '" + c.graph_path + "'");
    data = parse_multicurve(in);
  } else if (c.path_length > 0) {
    data = type_a_path(c.path_length);
  } else {
    throw UsageError("thurston needs --graph FILE or --path L");
  }
  const ThurstonRep t = thurston_rep(data);
  json doc = {{"mu", t.mu}, {"v", t.v}, {"v_prime", t.v_prime}, {"residual", t.residual},
              {"iterations", t.iterations}, {"t_a", t.ta}, {"t_b", t.tb}};
  doc["mu_exact"] = t.mu_exact ? to_json(t.mu_exact->value()) : json(nullptr);
  doc["exact_eigenvector"] = t.exact_eigenvector;
  out.doc = std::move(doc);
  Table props{"Perron-Frobenius data", {"item", "value"}, {}};
  props.rows.push_back({"mu", decimal(t.mu, c.precision)});
  props.rows.push_back({"residual", decimal(t.residual, std::max(c.precision, 16))});
  if (t.mu_exact) props.rows.push_back({"mu exact", "2cos(pi/" + std::to_string(c.path_length + 1) + ")"});
  out.tables.push_back(std::move(props));
  const auto to_m = [](const std::array<double, 4>& a) { return a; };
  for (const auto& [name, m] : {std::pair{"T_A", to_m(t.ta)}, std::pair{"T_B", to_m(t.tb)}})
    out.tables.push_back({name,
                          {"", "0", "1"},
                          {{"0", decimal(m[0], c.precision), decimal(m[1], c.precision)},
                           {"1", decimal(m[2], c.precision), decimal(m[3], c.precision)}}});
  return kOk;
}

int cmd_spin_dims(const RunConfig& c, Output& out) {
  if (c.genus < 1) throw UsageError("genus must be >= 1");
  const Integer even = spin_dims(c.level, c.genus, 0), odd = spin_dims(c.level, c.genus, 1);
  const auto [n_even, n_odd] = orbit_counts(c.genus);
  const Integer total = verlinde_dim(c.level, c.genus);
  json doc = {{"level", c.level},         {"genus", c.genus},        {"d_even", to_json(even)},
              {"d_odd", to_json(odd)},    {"even_structures", n_even}, {"odd_structures", n_odd},
              {"d_total", to_json(total)}};
  Table t{"spin decomposition, r = " + std::to_string(c.level) + ", g = " + std::to_string(c.genus),
          {"item", "value"},
          {{"d^0", even.get_str()},
           {"d^1", odd.get_str()},
           {"even structures", std::to_string(n_even)},
           {"odd structures", std::to_string(n_odd)},
           {"d_r(g)", total.get_str()}}};
  if (c.level % 4 == 2 && c.level >= 6 && c.genus >= 2) {
    const ReducibilityReport r = reducibility_report(c.level, c.genus);
    doc["reducibility"] = {{"parity", r.parity},
                           {"summands", {to_json(r.summands[0]), to_json(r.summands[1]), to_json(r.summands[2])}},
                           {"all_positive", r.all_positive},
                           {"sums_to_total", r.sums_to_total}};
    t.rows.push_back({"flat structure parity", std::to_string(r.parity)});
    t.rows.push_back({"V(q_w)", r.summands[0].get_str()});
    t.rows.push_back({"V^0 minus V(q_w)", r.summands[1].get_str()});
    t.rows.push_back({"V^1 minus V(q_w)", r.summands[2].get_str()});
  }
  out.doc = std::move(doc);
  out.tables.push_back(std::move(t));
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Output result;
  int code = kOk;
  try {
    const Format format = parse_format(config.format);
    if (config.precision < 1 || config.precision > 60) throw UsageError("precision must lie in [1, 60]");
    const std::string& s = config.subcommand;
    if (s == "dims") code = cmd_dims(config, result);
    else if (s == "coefficients") code = cmd_coefficients(config, result);
    else if (s == "modular-data") code = cmd_modular_data(config, result);
    else if (s == "genus2-matrices") code = cmd_genus2_matrices(config, result);
    else if (s == "verify") code = cmd_verify(config, result);
    else if (s == "trace-table") code = cmd_trace_table(config, result);
    else if (s == "infinite-image") code = cmd_infinite_image(config, result);
    else if (s == "hecke-sl2") code = cmd_hecke_sl2(config, result);
    else if (s == "thurston") code = cmd_thurston(config, result);
    else if (s == "spin-dims") code = cmd_spin_dims(config, result);
    else throw UsageError("unknown subcommand '" + s + "'");
    emit(result, format, out);
  } catch (const std::logic_error& e) {
    // Precondition failures: invalid_argument, domain_error and the library's typed errors.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact TQFT representations of Hecke groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--format", c.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--precision", c.precision, "digits after the decimal point");
  app.add_option("--twist", c.twist, "theta exponent convention: plus i(i+2), minus i(i-2)")
      ->check(CLI::IsMember({"plus", "minus"}));

  auto level_root = [&](CLI::App* s) {
    s->add_option("--level,-r", c.level, "level r");
    s->add_option("--root,-k", c.root, "Galois exponent k with A = zeta_N^k (default: unitary root)");
  };

  auto* dims = app.add_subcommand("dims", "Verlinde dimensions and genus-2 basis sizes");
  dims->add_option("--genus,-g", c.genus);
  dims->add_option("--levels", c.levels)->delimiter(',');

  auto* coef = app.add_subcommand("coefficients", "Delta, theta, Theta, Tet and 6j tables");
  level_root(coef);

  auto* md = app.add_subcommand("modular-data", "genus-1 S and T matrices");
  level_root(md);

  auto* g2 = app.add_subcommand("genus2-matrices", "genus-2 J and T matrices");
  level_root(g2);
  auto* norm = g2->add_flag("--normalized", "unitary J (default)");
  g2->add_flag("--raw", c.raw, "J~ and the non-normalized J")->excludes(norm);
  g2->add_flag("--exact-roots", c.exact_roots, "attach square roots lying in the field");

  auto* ver = app.add_subcommand("verify", "genus-1 and genus-2 relation suites");
  level_root(ver);
  ver->add_option("--levels", c.levels)->delimiter(',');
  ver->add_option("--genus,-g", c.genus_filter);

  auto* tr = app.add_subcommand("trace-table", "tr(J T J T^-1) against d_r(2)");
  tr->add_option("--levels", c.levels)->delimiter(',');
  tr->add_option("--root,-k", c.root, "Galois exponent (default 1, A = e^{i pi/(r+2)} for odd r)");

  auto* inf = app.add_subcommand("infinite-image", "certificates that the genus-2 image is infinite");
  level_root(inf);
  inf->add_option("--factor", c.factor, "designated factor, constant term first")->delimiter(',');

  auto* hs = app.add_subcommand("hecke-sl2", "Hecke group words and presentation check");
  hs->add_option("--q,-q", c.q);
  hs->add_option("--word,-w", c.word);

  auto* th = app.add_subcommand("thurston", "Thurston construction from two multicurves");
  auto* graph = th->add_option("--graph", c.graph_path, "intersection data file");
  th->add_option("--path", c.path_length, "type-A path with L vertices")->excludes(graph);

  auto* sp = app.add_subcommand("spin-dims", "spin refinement of the TQFT dimension");
  sp->add_option("--level,-r", c.level);
  sp->add_option("--genus,-g", c.genus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace heckerep::cli
