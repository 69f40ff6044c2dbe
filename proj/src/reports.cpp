#include "unimodal/reports.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "unimodal/errors.hpp"

namespace unimodal {

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

SingularitySpec spec_with_weights(std::string_view text, const std::vector<int>& weights,
                                  const CatalogLimits& limits) {
  auto summands = parse_summands(text, limits);
  if (!weights.empty()) {
    if (weights.size() != summands.size()) {
      throw ParameterOutOfRange("expected " + std::to_string(summands.size()) + " weights, got " +
                                std::to_string(weights.size()));
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 1 || weights[i] > limits.max_parameter) {
        throw ParameterOutOfRange("weight " + std::to_string(weights[i]) + " out of range");
      }
      summands[i].weight = weights[i];
    }
  }
  return SingularitySpec(std::move(summands));
}

// -- JSON ------------------------------------------------------------------

nlohmann::json to_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

nlohmann::json to_json(const CircleReport& r) {
  return {{"degree", r.degree},
          {"at_one", r.at_one},
          {"at_minus_one", r.at_minus_one},
          {"on_circle_with_mult", r.on_circle_with_mult},
          {"on_circle_distinct", r.on_circle_distinct},
          {"off_circle_with_mult", r.off_circle_with_mult},
          {"is_unimodular", r.is_unimodular}};
}

nlohmann::json to_json(const NumericCensus& r) {
  return {{"degree", r.degree},       {"at_one", r.at_one},   {"at_minus_one", r.at_minus_one},
          {"inside", r.inside},       {"outside", r.outside}, {"undecided", r.undecided},
          {"precision_bits", r.precision_bits}};
}

namespace {

std::string sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

nlohmann::json pole_json(const Pole& p) {
  auto sources = nlohmann::json::array();
  for (const auto& s : p.sources) sources.push_back(s.to_string());
  auto residues = nlohmann::json::array();
  for (const auto& r : p.residue_terms) residues.push_back(r.to_string());
  return {{"location", p.location.get_str()},
          {"sources", sources},
          {"residue_sign", sign_char(p.residue_sign)},
          {"residue_value", static_cast<double>(p.residue_value)},
          {"residue_terms", residues},
          {"sign_certificate", p.sign_certified_numerically ? "numeric" : "exact"}};
}

}  // namespace

nlohmann::json to_json(const PhiReport& r) {
  auto poles = nlohmann::json::array();
  for (const auto& p : r.poles) poles.push_back(pole_json(p));
  auto zeros = nlohmann::json::array();
  for (long double z : r.zeros) zeros.push_back(static_cast<double>(z));
  return {{"poles", poles},
          {"n_plus", r.n_plus},
          {"n_minus", r.n_minus},
          {"phi_at_zero", r.phi_at_zero.get_str()},
          {"phi_at_half_pi", r.phi_at_half_pi.get_str()},
          {"c", r.c},
          {"zero_lower_bound", r.zero_lower_bound},
          {"numeric_zero_count", r.numeric_zero_count},
          {"suspected_touch_zeros", r.suspected_touch_zeros},
          {"zeros", zeros}};
}

nlohmann::json to_json(const CheckReport& r, bool include_timing) {
  nlohmann::json j{{"spec", r.spec},
                   {"p_algebra", to_json(r.p_algebra)},
                   {"p_lie", to_json(r.p_lie)},
                   {"palindromic", r.palindromic},
                   {"circle", r.circle ? to_json(*r.circle) : nlohmann::json(nullptr)},
                   {"numeric", r.numeric ? to_json(*r.numeric) : nlohmann::json(nullptr)},
                   {"numeric_only", r.numeric_only},
                   {"cross_check", r.cross_check ? nlohmann::json(*r.cross_check) : nlohmann::json(nullptr)},
                   {"phi", r.phi ? to_json(*r.phi) : nlohmann::json(nullptr)},
                   {"theorem_scope", to_string(r.theorem_scope)},
                   {"finding", r.finding}};
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::json to_json(const TableRow& r) {
  return {{"k", r.k}, {"family", to_string(r.family)}, {"off_count", r.off_count}, {"extrapolated", r.extrapolated}};
}

// -- poly ------------------------------------------------------------------

PolyReport run_poly(const SingularitySpec& spec) {
  return {spec.to_string(), combined_algebra(spec), combined_lie(spec)};
}

namespace {

std::string coefficient_list(const Polynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += p.coeffs()[i].get_str();
  }
  return out + "]";
}

void csv_coefficients(std::ostringstream& out, const std::string& name, const Polynomial& p) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    out << name << ',' << i << ',' << p.coeffs()[i].get_str() << '\n';
  }
}

}  // namespace

std::string render(const PolyReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json j{{"spec", report.spec},
                       {"p_algebra", to_json(report.p_algebra)},
                       {"p_lie", to_json(report.p_lie)},
                       {"p_algebra_text", report.p_algebra.to_string()},
                       {"p_lie_text", report.p_lie.to_string()}};
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "polynomial,power,coefficient\n";
      csv_coefficients(out, "p_algebra", report.p_algebra);
      csv_coefficients(out, "p_lie", report.p_lie);
      break;
    case OutputFormat::text:
      out << "spec:   " << report.spec << '\n';
      out << "P(S)   = " << report.p_algebra.to_string() << '\n';
      out << "         " << coefficient_list(report.p_algebra) << '\n';
      out << "P_L(S) = " << report.p_lie.to_string() << '\n';
      out << "         " << coefficient_list(report.p_lie) << '\n';
      break;
  }
  return out.str();
}

// -- check -----------------------------------------------------------------

namespace {

NumericCensus escalating_census(const Polynomial& p, const CrossCheckOptions& options) {
  unsigned prec = std::max(64u, options.initial_precision);
  while (true) {
    try {
      return numeric_census(p, prec);
    } catch (const PrecisionExhausted&) {
      if (prec >= options.precision_cap) throw;
      prec = std::min(prec * 2, options.precision_cap);
    }
  }
}

}  // namespace

CheckReport run_check(const SingularitySpec& spec, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  r.spec = spec.to_string();
  r.theorem_scope = theorem_scope(spec);
  r.p_algebra = combined_algebra(spec);
  r.p_lie = combined_lie(spec);

  if (!r.p_lie.is_zero()) {
    r.palindromic = is_palindromic(r.p_lie);
    try {
      r.circle = count_circle_roots(r.p_lie);
    } catch (const NotPalindromic&) {
      r.circle.reset();
    }
    if (r.circle) {
      CrossCheckResult cc = cross_check_detailed(r.p_lie, options.cross);
      r.cross_check = cc.agree;
      r.numeric = cc.numeric;
    } else {
      r.numeric_only = true;
      r.numeric = escalating_census(r.p_lie, options.cross);
    }
  }

  if (r.circle) {
    const int off = r.circle->off_circle_with_mult;
    if (r.theorem_scope == TheoremScope::A_D) r.finding = off != 0;
    if (r.theorem_scope == TheoremScope::A_D_E7) r.finding = off != 0 && off != 4;
  }
  if (options.with_phi && r.theorem_scope != TheoremScope::out_of_scope) r.phi = zero_bound_report(spec);

  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_code(const CheckReport& report) {
  if (report.cross_check && !*report.cross_check) return 4;
  if (report.finding) return 3;
  return 0;
}

std::string render(const CheckReport& r, OutputFormat format, bool include_timing) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json:
      out << to_json(r, include_timing).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      out << "spec,theorem_scope,degree,at_one,at_minus_one,on_circle_with_mult,on_circle_distinct,"
             "off_circle_with_mult,is_unimodular,palindromic,cross_check,finding\n";
      out << '"' << r.spec << "\"," << to_string(r.theorem_scope) << ',';
      if (r.circle) {
        const auto& c = *r.circle;
        out << c.degree << ',' << c.at_one << ',' << c.at_minus_one << ',' << c.on_circle_with_mult << ','
            << c.on_circle_distinct << ',' << c.off_circle_with_mult << ',' << (c.is_unimodular ? "true" : "false");
      } else {
        out << ",,,,,,";
      }
      out << ',' << (r.palindromic ? "true" : "false") << ','
          << (r.cross_check ? (*r.cross_check ? "true" : "false") : "") << ',' << (r.finding ? "true" : "false")
          << '\n';
      break;
    case OutputFormat::text: {
      out << "spec:         " << r.spec << '\n';
      out << "scope:        " << to_string(r.theorem_scope) << '\n';
      out << "P(S)        = " << r.p_algebra.to_string() << '\n';
      out << "P_L(S)      = " << r.p_lie.to_string() << '\n';
      out << "palindromic:  " << (r.palindromic ? "yes" : "no") << '\n';
      if (r.circle) {
        const auto& c = *r.circle;
        out << "degree:       " << c.degree << '\n';
        out << "roots at +1:  " << c.at_one << '\n';
        out << "roots at -1:  " << c.at_minus_one << '\n';
        out << "on circle:    " << c.on_circle_with_mult << " (" << c.on_circle_distinct << " distinct)\n";
        out << "off circle:   " << c.off_circle_with_mult << '\n';
        out << "unimodular:   " << (c.is_unimodular ? "yes" : "no") << '\n';
      } else if (r.p_lie.is_zero()) {
        out << "census:       none (P_L(S) is zero)\n";
      }
      if (r.numeric) {
        const auto& n = *r.numeric;
        out << (r.numeric_only ? "numeric only: " : "numeric:      ") << "inside " << n.inside << ", outside "
            << n.outside << ", near circle " << n.undecided << " at " << n.precision_bits << " bits\n";
      }
      if (r.cross_check) out << "cross-check:  " << (*r.cross_check ? "agree" : "DISAGREE") << '\n';
      if (r.phi) {
        out << "phi:          poles " << r.phi->poles.size() << " (n+ " << r.phi->n_plus << ", n- " << r.phi->n_minus
            << "), c " << r.phi->c << ", bound " << r.phi->zero_lower_bound << ", zeros "
            << r.phi->numeric_zero_count << '\n';
      }
      if (r.finding) {
        out << "FINDING:      off-circle count contradicts the expectation for scope "
            << to_string(r.theorem_scope) << '\n';
      }
      if (include_timing) out << "elapsed:      " << r.elapsed_ms << " ms\n";
      break;
    }
  }
  return out.str();
}

// -- table -----------------------------------------------------------------

std::string to_string(TableFamily family) {
  switch (family) {
    case TableFamily::A_k_E7:
      return "A_k_E7";
    case TableFamily::D_2k_E7:
      return "D_2k_E7";
    case TableFamily::D_2k1_E7:
      return "D_2k1_E7";
  }
  return "?";
}

SingularitySpec table_spec(int k, TableFamily family) {
  SimpleSingularity first;
  switch (family) {
    case TableFamily::A_k_E7:
      first = SimpleSingularity::A(k);
      break;
    case TableFamily::D_2k_E7:
      first = SimpleSingularity::D(2 * k);
      break;
    case TableFamily::D_2k1_E7:
      first = SimpleSingularity::D(2 * k + 1);
      break;
  }
  return SingularitySpec({{first, 1}, {SimpleSingularity::E7(), 1}});
}

namespace {

// Filled cells of the reference table.
bool reference_cell(int k, TableFamily family) {
  switch (family) {
    case TableFamily::A_k_E7:
      return k >= 4 && k <= 16;
    case TableFamily::D_2k_E7:
      return k >= 3 && k <= 15;
    case TableFamily::D_2k1_E7:
      return k >= 2 && k <= 14;
  }
  return false;
}

constexpr TableFamily kFamilies[] = {TableFamily::A_k_E7, TableFamily::D_2k_E7, TableFamily::D_2k1_E7};

}  // namespace

std::vector<TableRow> run_table(int k_min, int k_max, const TableOptions& options) {
  if (k_min < 2 || k_min > k_max || k_max > options.k_cap) {
    throw std::invalid_argument("table range must satisfy 2 <= k_min <= k_max <= " + std::to_string(options.k_cap));
  }
  const int count = k_max - k_min + 1;
  std::vector<TableRow> rows(static_cast<std::size_t>(count) * 3);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < count; i = next++) {
      const int k = k_min + i;
      for (std::size_t f = 0; f < 3; ++f) {
        const TableFamily family = kFamilies[f];
        const auto report = count_circle_roots(combined_lie(table_spec(k, family)));
        rows[static_cast<std::size_t>(i) * 3 + f] = {k, family, report.off_circle_with_mult,
                                                      !reference_cell(k, family)};
      }
      if (options.on_row_done) options.on_row_done(k);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string render(const std::vector<TableRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "k,family,off_count\n";
      for (const auto& r : rows) out << r.k << ',' << to_string(r.family) << ',' << r.off_count << '\n';
      break;
    case OutputFormat::text: {
      out << "roots off the unit circle for P_L(S + E7)\n";
      out << "   k   A_k+E7   D_2k+E7   D_2k+1+E7\n";
      for (std::size_t i = 0; i + 2 < rows.size(); i += 3) {
        auto cell = [](const TableRow& r) { return std::to_string(r.off_count) + (r.extrapolated ? "*" : " "); };
        char line[96];
        std::snprintf(line, sizeof line, "%4d   %6s   %7s   %9s\n", rows[i].k, cell(rows[i]).c_str(),
                      cell(rows[i + 1]).c_str(), cell(rows[i + 2]).c_str());
        out << line;
      }
      out << "(* = cell not in the reference table)\n";
      break;
    }
  }
  return out.str();
}

// -- phi -------------------------------------------------------------------

std::string render(const PhiCommandReport& report, OutputFormat format) {
  const PhiReport& r = report.phi;
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json j = to_json(r);
      j["spec"] = report.spec;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "field,value\n";
      out << "spec," << report.spec << '\n';
      for (const auto& p : r.poles) out << "pole," << p.location.get_str() << ':' << sign_char(p.residue_sign) << '\n';
      out << "n_plus," << r.n_plus << '\n';
      out << "n_minus," << r.n_minus << '\n';
      out << "phi_at_zero," << r.phi_at_zero.get_str() << '\n';
      out << "phi_at_half_pi," << r.phi_at_half_pi.get_str() << '\n';
      out << "c," << r.c << '\n';
      out << "zero_lower_bound," << r.zero_lower_bound << '\n';
      out << "numeric_zero_count," << r.numeric_zero_count << '\n';
      break;
    case OutputFormat::text: {
      out << "spec: " << report.spec << '\n';
      out << "poles in (0, pi/2):\n";
      for (const auto& p : r.poles) {
        std::string sources;
        for (const auto& s : p.sources) sources += (sources.empty() ? "" : ",") + s.to_string();
        char value[64];
        std::snprintf(value, sizeof value, "%.12Lg", p.residue_value);
        out << "  x = " << p.location.get_str() << " pi   residue " << sign_char(p.residue_sign) << " (" << value
            << ")   from " << sources << (p.sign_certified_numerically ? "   [numeric sign]" : "") << '\n';
      }
      out << "n+ = " << r.n_plus << ", n- = " << r.n_minus << '\n';
      out << "phi(0) = " << r.phi_at_zero.get_str() << ", phi(pi/2) = " << r.phi_at_half_pi.get_str() << '\n';
      out << "c = " << r.c << ", zero lower bound = " << r.zero_lower_bound << '\n';
      out << "zeros of phi in (0, pi/2): " << r.numeric_zero_count;
      if (r.suspected_touch_zeros) out << " (+" << r.suspected_touch_zeros << " suspected touch zeros)";
      out << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace unimodal
