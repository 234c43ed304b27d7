#include "fliptoep/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fliptoep {

namespace {

const char* class_name(SymClass c) { return c == SymClass::symmetric ? "symmetric" : "skew"; }

const char* dist_class_name(DistClass c) {
  switch (c) {
    case DistClass::all_T: return "all-T";
    case DistClass::all_H: return "all-H";
    case DistClass::plus: return "plus";
    case DistClass::minus: return "minus";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::outlier: return "outlier";
    case Verdict::violation: return "violation";
  }
  return "?";
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for " + path);
}

std::string pairing_csv(const SpectralPairing& pairing) {
  std::string out = "i,lamT,lamH,class\n";
  for (const auto& r : pairing.records) {
    out += std::to_string(r.index);
    out += ',';
    out += fmt17(r.lamT);
    out += ',';
    out += fmt17(r.lamH);
    out += ',';
    out += class_name(r.cls);
    out += '\n';
  }
  return out;
}

std::string match_csv(const MatchReport& report) {
  std::string out = "i,x_i,f_x_i,lamT_i,deviation\n";
  for (int i = 0; i < report.n; ++i) {
    const auto u = static_cast<size_t>(i);
    out += std::to_string(i + 1);
    out += ',';
    out += fmt17(report.grid.points[u]);
    out += ',';
    out += fmt17(report.fvals[u]);
    out += ',';
    out += fmt17(report.lam[u]);
    out += ',';
    out += fmt17(report.deviations[u]);
    out += '\n';
  }
  return out;
}

std::string match_summary_json(const MatchReport& report, bool exact_grid_measure) {
  nlohmann::json j;
  j["n"] = report.n;
  if (exact_grid_measure)
    j["m_Gn"] = report.grid.m;
  else
    j["M_n"] = report.Mn;
  return j.dump(2) + "\n";
}

std::string localization_json(const LocalizationReport& report) {
  nlohmann::json j;
  j["d"] = report.d;
  j["m_absf"] = report.m_absf;
  j["M_absf"] = report.M_absf;
  if (report.r) j["r"] = *report.r;
  if (report.outlier_budget) j["outlier_budget"] = *report.outlier_budget;
  j["outliers"] = report.outlier_count;
  j["violations"] = report.violation_count;
  j["inside"] = report.inside_count;
  j["strict_ok"] = report.strict_ok;
  j["abs_f_constant"] = report.abs_f_constant;
  j["n"] = report.n;
  j["range_certification"] = "sampled";
  nlohmann::json verdicts = nlohmann::json::array();
  for (Verdict v : report.verdicts) verdicts.push_back(verdict_name(v));
  j["verdicts"] = std::move(verdicts);
  return j.dump(2) + "\n";
}

std::string dist_csv(const std::vector<DistReport>& reports) {
  std::string out = "n,p,class,lhs,rhs,gap\n";
  for (const auto& rep : reports)
    for (size_t p = 0; p < rep.gaps.size(); ++p) {
      out += std::to_string(rep.n);
      out += ',';
      out += std::to_string(p + 1);
      out += ',';
      out += dist_class_name(rep.cls);
      out += ',';
      out += fmt17(rep.lhs[p]);
      out += ',';
      out += fmt17(rep.rhs[p]);
      out += ',';
      out += fmt17(rep.gaps[p]);
      out += '\n';
    }
  return out;
}

std::string trace_csv(const SolveTrace& trace) {
  std::string out = "k,relres,bound\n";
  for (size_t k = 0; k < trace.relres.size(); ++k) {
    out += std::to_string(k + 1);
    out += ',';
    out += fmt17(trace.relres[k]);
    out += ',';
    out += k < trace.bound.size() ? fmt17(trace.bound[k]) : "";
    out += '\n';
  }
  return out;
}

std::string coeffs_csv(const FourierCoeffs& coeffs) {
  std::string out = "k,re,im\n";
  for (int k = coeffs.k_min; k <= coeffs.k_max; ++k) {
    out += std::to_string(k);
    out += ',';
    out += fmt17(coeffs.at(k).real());
    out += ',';
    out += fmt17(coeffs.at(k).imag());
    out += '\n';
  }
  return out;
}

std::string matrix_csv(const ToeplitzMatrix& t) {
  std::string out;
  const int n = t.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      if (t.is_real()) {
        out += fmt17(t.entry(i, j).real());
      } else {
        const double im = t.entry(i, j).imag();
        out += fmt17(t.entry(i, j).real());
        out += im < 0 ? '-' : '+';
        out += fmt17(std::abs(im));
        out += 'i';
      }
    }
    out += '\n';
  }
  return out;
}

std::string matrix_header_json(const ToeplitzMatrix& t, const std::string& symbol_text) {
  nlohmann::json j;
  j["order"] = t.order();
  j["symbol"] = symbol_text;
  j["k_min"] = -(t.order() - 1);
  j["k_max"] = t.order() - 1;
  j["real"] = t.is_real();
  return j.dump(2) + "\n";
}

std::string grid_csv(const Grid& grid) {
  std::string out = "i,x_i\n";
  for (size_t i = 0; i < grid.points.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += fmt17(grid.points[i]);
    out += '\n';
  }
  return out;
}

}  // namespace fliptoep
