#include "sandwich/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "sandwich/bicyclic.hpp"
#include "sandwich/deformed.hpp"
#include "sandwich/isn.hpp"
#include "sandwich/tn.hpp"
#include "sandwich/util.hpp"

namespace sandwich::cli {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int table_cap(const GlobalOptions& opts) { return opts.cap > 0 ? opts.cap : kDefaultTableCap; }
int element_cap(const GlobalOptions& opts) {
  return opts.cap > 0 ? opts.cap : kDefaultEnumerationCap;
}

std::string cell_to_string(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string partition_of_type(const TypeVector& t) {
  std::string out;
  for (int k = t.degree(); k >= 1; --k)
    for (int c = 0; c < t[k]; ++c) {
      if (!out.empty()) out += '+';
      out += std::to_string(k);
    }
  return out;
}

nlohmann::json check_row(const checks::CheckResult& r) {
  return nlohmann::json::array(
      {r.id, r.name, r.pass ? "PASS" : "FAIL", r.instances, r.seconds, r.failure});
}

}  // namespace

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"command", command}, {"meta", meta},   {"columns", columns},
                        {"rows", rows},       {"extra", extra}, {"ok", ok},
                        {"seconds", seconds}};
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.meta = j.at("meta");
  r.columns = j.at("columns").get<std::vector<std::string>>();
  r.rows = j.at("rows");
  r.extra = j.at("extra");
  r.ok = j.at("ok").get<bool>();
  r.seconds = j.at("seconds").get<double>();
  return r;
}

std::string Report::render_text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  if (!meta.empty()) {
    os << "meta:";
    for (auto it = meta.begin(); it != meta.end(); ++it)
      os << " " << it.key() << "=" << cell_to_string(it.value());
    os << "\n";
  }
  if (!columns.empty()) {
    std::vector<size_t> widths;
    widths.reserve(columns.size());
    for (const auto& c : columns) widths.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (size_t i = 0; i < columns.size(); ++i) {
        line.push_back(i < row.size() ? cell_to_string(row[i]) : "");
        widths[i] = std::max(widths[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (size_t i = 0; i < line.size(); ++i) {
        os << (i ? "  " : "") << line[i];
        if (i + 1 < line.size()) os << std::string(widths[i] - line[i].size(), ' ');
      }
      os << "\n";
    };
    emit(columns);
    for (const auto& line : cells) emit(line);
  }
  for (auto it = extra.begin(); it != extra.end(); ++it)
    os << it.key() << ": " << cell_to_string(it.value()) << "\n";
  os << "result: " << (ok ? "PASS" : "FAIL") << " (" << seconds << "s)\n";
  return os.str();
}

std::string Report::render_csv() const {
  std::ostringstream os;
  for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_to_string(row[i]));
    os << "\n";
  }
  return os.str();
}

std::string Report::render(const std::string& format) const {
  if (format == "text") return render_text();
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "csv") return render_csv();
  throw UsageError("unknown format '" + format + "' (expected text, json or csv)");
}

Report cmd_idempotents_finite(Family family, int n, const std::string& element_literal,
                              const GlobalOptions& opts) {
  Stopwatch watch;
  Report r;
  r.command = "idempotents";
  r.meta = {{"family", std::string(family_name(family))}, {"n", n}, {"element", element_literal}};
  r.columns = {"idempotent"};

  if (family == Family::IS) {
    auto alpha = parse_partial_injection(element_literal);
    if (alpha.degree() != n) throw UsageError("element degree does not match n");
    auto table = build_deformed_table(alpha, table_cap(opts), false);
    std::set<std::string> brute;
    for (int i : idempotents_of_table(table)) brute.insert(table.labels()[i]);
    std::set<std::string> constructed;
    for (const auto& e : enumerate_idempotents_isn(alpha)) constructed.insert(to_literal(e));
    for (const auto& label : brute) r.rows.push_back(nlohmann::json::array({label}));
    std::uint64_t formula = idempotent_count_formula(alpha);
    r.extra["rank"] = alpha.rank();
    r.extra["formula_count"] = formula;
    r.extra["brute_force_count"] = brute.size();
    r.ok = brute.size() == formula && brute == constructed;
    r.extra["verdict"] = r.ok ? "PASS" : "FAIL";
  } else if (family == Family::T) {
    auto a = parse_transformation(element_literal);
    if (a.degree() != n) throw UsageError("element degree does not match n");
    auto table = build_deformed_table(a, table_cap(opts), false);
    auto idems = idempotents_of_table(table);
    for (int i : idems) r.rows.push_back(nlohmann::json::array({table.labels()[i]}));
    r.extra["brute_force_count"] = idems.size();
  } else {
    throw UsageError("idempotents supports families T, IS and B");
  }
  r.seconds = watch.seconds();
  return r;
}

Report cmd_idempotents_bicyclic(const std::string& element_literal, int chain,
                                const GlobalOptions& opts) {
  (void)opts;
  Stopwatch watch;
  if (chain < 1) throw UsageError("--chain must be at least 1");
  auto alpha = parse_bicyclic(element_literal);
  Report r;
  r.command = "idempotents";
  r.meta = {{"family", "B"}, {"element", element_literal}, {"chain", chain}};
  r.columns = {"idempotent"};
  bool all_idempotent = true;
  for (int i = 0; i < chain; ++i) {
    auto e = epsilon(alpha, i);
    all_idempotent = all_idempotent && is_deformed_idempotent(e, alpha);
    r.rows.push_back(nlohmann::json::array({to_literal(e)}));
  }
  r.ok = all_idempotent;
  r.extra["verdict"] = r.ok ? "PASS" : "FAIL";
  r.seconds = watch.seconds();
  return r;
}

Report cmd_classify(Family family, int n, const GlobalOptions& opts) {
  Stopwatch watch;
  Report r;
  r.command = "classify";
  r.meta = {{"family", std::string(family_name(family))}, {"n", n}};
  r.columns = {"class", "invariant", "representative", "element_count"};

  std::uint64_t expected = 0;
  std::uint64_t classes = 0;
  if (family == Family::IS) {
    auto elements = enumerate_partial_injections(n, element_cap(opts));
    std::map<int, std::pair<std::string, std::uint64_t>> by_rank;  // rank -> (rep, count)
    for (const auto& alpha : elements) {
      auto& entry = by_rank[alpha.rank()];
      if (entry.second == 0) entry.first = to_literal(alpha);
      ++entry.second;
    }
    int index = 0;
    for (const auto& [rank, entry] : by_rank)
      r.rows.push_back(nlohmann::json::array(
          {++index, "rank " + std::to_string(rank), entry.first, entry.second}));
    classes = by_rank.size();
    expected = isn_class_count(n);
  } else if (family == Family::T) {
    r.columns.push_back("sim_classes");  // ~_a classes of the representative: rank^n
    auto elements = enumerate_transformations(n, element_cap(opts));
    std::map<TypeVector, std::pair<std::string, std::uint64_t>> by_type;
    for (const auto& a : elements) {
      auto& entry = by_type[type_of(a)];
      if (entry.second == 0) entry.first = to_literal(a);
      ++entry.second;
    }
    int index = 0;
    for (const auto& [type, entry] : by_type)
      r.rows.push_back(nlohmann::json::array({++index, "type " + type.to_string(), entry.first,
                                              entry.second,
                                              checked_pow(type.image_size(), n)}));
    classes = by_type.size();
    expected = partition_count(n);
  } else {
    throw UsageError("classify supports families T and IS");
  }

  r.extra["class_count"] = classes;
  r.extra["expected_class_count"] = expected;
  r.ok = classes == expected;
  r.extra["verdict"] = std::to_string(classes) + " classes (expected " + std::to_string(expected) +
                       "): " + (r.ok ? "PASS" : "FAIL");
  r.seconds = watch.seconds();
  return r;
}

namespace {

template <typename Elem, typename Witness>
void fill_witness_report(Report& r, const Elem& a, const Elem& b, const Witness& w,
                         bool identity_ok) {
  r.rows.push_back(nlohmann::json::array({to_literal(a), to_literal(b), to_literal(w.tau),
                                          to_literal(w.pi), identity_ok ? "PASS" : "FAIL"}));
  r.extra["witness"] = {{"alpha", to_literal(a)},
                        {"beta", to_literal(b)},
                        {"tau", to_literal(w.tau)},
                        {"pi", to_literal(w.pi)}};
}

}  // namespace

Report cmd_witness(Family family, int n, const std::string& a_literal,
                   const std::string& b_literal, bool full_check, const GlobalOptions& opts) {
  Stopwatch watch;
  Report r;
  r.command = "witness";
  r.meta = {{"family", std::string(family_name(family))},
            {"n", n},
            {"a", a_literal},
            {"b", b_literal},
            {"full_check", full_check}};
  r.columns = {"a", "b", "tau", "pi", "sandwich_identity"};

  if (family == Family::IS) {
    auto alpha = parse_partial_injection(a_literal);
    auto beta = parse_partial_injection(b_literal);
    if (alpha.degree() != n || beta.degree() != n) throw UsageError("element degree does not match n");
    if (alpha.rank() != beta.rank()) {
      r.ok = false;
      r.extra["error"] = "rank mismatch " + std::to_string(alpha.rank()) + " vs " +
                         std::to_string(beta.rank());
      r.seconds = watch.seconds();
      return r;
    }
    auto w = isn_witness(alpha, beta);
    bool identity_ok =
        compose(compose(w.tau.as_partial_injection(), alpha), w.pi.as_partial_injection()) == beta;
    fill_witness_report(r, alpha, beta, w, identity_ok);
    r.ok = identity_ok;
    if (full_check && r.ok) {
      auto elements = enumerate_partial_injections(n, element_cap(opts));
      bool hom = true;
      for (const auto& xi : elements) {
        for (const auto& eta : elements) {
          if (!(isn_iso_map(w, sandwich_product(xi, alpha, eta)) ==
                sandwich_product(isn_iso_map(w, xi), beta, isn_iso_map(w, eta)))) {
            hom = false;
            break;
          }
        }
        if (!hom) break;
      }
      r.extra["homomorphism_check"] = hom ? "PASS" : "FAIL";
      r.ok = r.ok && hom;
    }
  } else if (family == Family::T) {
    auto a = parse_transformation(a_literal);
    auto b = parse_transformation(b_literal);
    if (a.degree() != n || b.degree() != n) throw UsageError("element degree does not match n");
    if (!(type_of(a) == type_of(b))) {
      r.ok = false;
      r.extra["error"] =
          "type mismatch " + type_of(a).to_string() + " vs " + type_of(b).to_string();
      r.seconds = watch.seconds();
      return r;
    }
    auto w = tn_witness(a, b);
    bool identity_ok =
        compose(compose(w.tau.as_transformation(), a), w.pi.as_transformation()) == b;
    fill_witness_report(r, a, b, w, identity_ok);
    r.ok = identity_ok;
    if (full_check && r.ok) {
      auto elements = enumerate_transformations(n, element_cap(opts));
      bool hom = true;
      for (const auto& x : elements) {
        for (const auto& y : elements) {
          if (!(tn_iso_map(w, sandwich_product(x, a, y)) ==
                sandwich_product(tn_iso_map(w, x), b, tn_iso_map(w, y)))) {
            hom = false;
            break;
          }
        }
        if (!hom) break;
      }
      r.extra["homomorphism_check"] = hom ? "PASS" : "FAIL";
      r.ok = r.ok && hom;
    }
  } else {
    throw UsageError("witness supports families T and IS");
  }
  r.seconds = watch.seconds();
  return r;
}

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "lemma1", "thm1",  "lemma2-eq1", "type-recovery",    "thm2",
      "prop1",  "prop2", "thm3",       "thm4",             "oracle-crosscheck"};
  return ids;
}

Report cmd_verify(const std::string& id, const VerifyBounds& bounds, const GlobalOptions& opts) {
  Stopwatch watch;
  auto pick = [](int value, int fallback) { return value > 0 ? value : fallback; };

  std::vector<checks::CheckResult> results;
  nlohmann::json meta = {{"id", id}, {"seed", opts.seed}, {"jobs", opts.jobs}};
  if (id == "lemma1") {
    int n = pick(bounds.n, 4);
    meta["n"] = n;
    results.push_back(checks::check_lemma1(n, opts.jobs));
  } else if (id == "thm1") {
    int n = pick(bounds.n, 3);
    int samples = pick(bounds.samples, 5);
    meta["n"] = n;
    meta["samples"] = samples;
    results.push_back(checks::check_theorem1_sufficiency(n, opts.jobs));
    results.push_back(checks::check_theorem1_necessity(n, samples, opts.seed, opts.jobs));
    results.push_back(checks::check_isn_classification(n));
  } else if (id == "lemma2-eq1") {
    int n = pick(bounds.n, 4);
    meta["n"] = n;
    results.push_back(checks::check_lemma2_eq1(n, n <= 3, opts.jobs));
  } else if (id == "type-recovery") {
    int n = pick(bounds.n, 4);
    meta["n"] = n;
    results.push_back(checks::check_type_recovery(n, opts.jobs));
  } else if (id == "thm2") {
    int n = pick(bounds.n, 3);
    int samples = pick(bounds.samples, 10);
    meta["n"] = n;
    meta["samples"] = samples;
    results.push_back(checks::check_theorem2(n, n + 1, samples, opts.seed, opts.jobs));
  } else if (id == "prop1") {
    int brute = pick(bounds.n, 5);
    meta["n"] = brute;
    results.push_back(checks::check_prop1(brute, 6, 4));
  } else if (id == "prop2") {
    int grid = pick(bounds.grid, 4);
    meta["grid"] = grid;
    results.push_back(checks::check_prop2(grid, 12, 8));
  } else if (id == "thm3") {
    int grid = pick(bounds.grid, 5);
    meta["grid"] = grid;
    results.push_back(checks::check_theorem3(grid));
  } else if (id == "thm4") {
    int grid = pick(bounds.grid, 3);
    std::uint64_t cases = bounds.cases > 0 ? bounds.cases : 10000;
    meta["grid"] = grid;
    meta["cases"] = cases;
    results.push_back(checks::check_theorem4(6, grid, cases, opts.seed));
  } else if (id == "oracle-crosscheck") {
    int samples = pick(bounds.samples, 100);
    meta["samples"] = samples;
    results.push_back(checks::check_oracle(samples, 3, opts.seed, opts.jobs));
  } else {
    throw UsageError("unknown theorem id '" + id + "'");
  }

  Report r;
  r.command = "verify";
  r.meta = std::move(meta);
  r.columns = {"check", "description", "verdict", "instances", "seconds", "counterexample"};
  r.ok = true;
  for (const auto& res : results) {
    r.rows.push_back(check_row(res));
    r.ok = r.ok && res.pass;
  }
  r.seconds = watch.seconds();
  return r;
}

Report cmd_count(int n, const GlobalOptions& opts) {
  (void)opts;
  Stopwatch watch;
  if (n < 1 || n > 15) throw UsageError("count supports 1 <= n <= 15 (exact 64-bit arithmetic)");
  Report r;
  r.command = "count";
  r.meta = {{"n", n}};
  r.columns = {"partition", "type", "count"};
  std::uint64_t total = 0;
  auto types = enumerate_types(n);
  for (const auto& t : types) {
    std::uint64_t c = count_of_type(t);
    total += c;
    r.rows.push_back(nlohmann::json::array({partition_of_type(t), t.to_string(), c}));
  }
  r.extra["total"] = total;
  r.extra["expected_total"] = checked_pow(n, n);
  r.extra["class_count"] = types.size();
  r.extra["expected_class_count"] = partition_count(n);
  r.ok = total == checked_pow(n, n) && types.size() == partition_count(n);
  r.extra["verdict"] = r.ok ? "PASS" : "FAIL";
  r.seconds = watch.seconds();
  return r;
}

}  // namespace sandwich::cli
