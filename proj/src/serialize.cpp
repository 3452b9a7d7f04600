#include "daubloc/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "daubloc/error.hpp"

namespace daubloc::io {

namespace {

void write(std::string& out, const Json& value, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        write(out, item, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write(out, item, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      out += std::isfinite(x) ? format_number(x) : "null";
      return;
    }
    default:
      out += value.dump();
  }
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw ValidationError(std::string("expected a number under \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

class CsvLine {
 public:
  CsvLine& field(const std::string& text) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += text;
    return *this;
  }
  CsvLine& number(double x) { return field(format_number(x)); }
  CsvLine& integer(long long i) { return field(std::to_string(i)); }
  CsvLine& empty() { return field(""); }
  std::string str() const { return line_ + "\n"; }

 private:
  std::string line_;
  bool first_ = true;
};

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return "";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string dump(const Json& value) {
  std::string out;
  write(out, value, 0);
  out += '\n';
  return out;
}

Json to_json(const IntervalUnion& u) {
  Json pieces = Json::array();
  for (const Interval& piece : u.intervals()) pieces.push_back(Json::array({piece.a, piece.b}));
  return Json{{"intervals", pieces}};
}

Json to_json(const CantorSpec& spec) { return Json{{"L", spec.base_length}, {"n", spec.iterate}}; }

Json to_json(const Spectrum& s) {
  return Json{{"lambdas", s.lambdas}, {"tail_bound", s.tail_bound}, {"K", s.K()}};
}

Json to_json(const NormEstimate& e) {
  return Json{{"value", e.value}, {"argmax_k", e.argmax_k}, {"tail_bound", e.tail_bound}, {"k_searched", e.k_searched}};
}

Json to_json(const TraceCheck& t) {
  return Json{{"partial_trace", t.partial_trace}, {"scaled_measure", t.scaled_measure}};
}

Json to_json(const RatioStats& stats) {
  return Json{{"n", stats.n}, {"grid", stats.grid}, {"ratios", stats.ratios}, {"min", stats.min}, {"max", stats.max}};
}

Json to_json(const RingReport& report) {
  Json rows = Json::array();
  for (const RingRow& row : report.rows) {
    Json r{{"piR2", row.piR2}, {"skipped", row.skipped}};
    if (row.skipped) {
      r["note"] = row.note;
    } else {
      r["norm"] = row.norm;
      r["argmax_k"] = row.argmax_k;
      r["stirling_lower"] = row.stirling_lower;
      r["stirling_upper"] = row.stirling_upper;
      r["analytic_lower"] = row.analytic_lower;
      r["analytic_upper"] = row.analytic_upper;
      r["asym_residual"] = row.asym_residual;
      r["argmax_adjacent"] = row.argmax_adjacent;
    }
    rows.push_back(std::move(r));
  }
  return Json{{"rows", rows}};
}

Json to_json(const CombReport& report) {
  Json rows = Json::array();
  for (const CombRow& row : report.rows) {
    rows.push_back(Json{{"s", row.s},
                        {"lambda0", row.lambda0},
                        {"norm", row.norm},
                        {"lower", row.lower},
                        {"upper", row.upper},
                        {"argmax_k", row.argmax_k}});
  }
  return Json{{"rows", rows},
              {"s0_estimate", report.s0_estimate},
              {"transition_found", report.transition_found},
              {"constant", kCombConstant},
              {"constant_check", report.constant_check}};
}

Json to_json(const CantorReport& report) {
  Json rows = Json::array();
  for (const CantorRow& row : report.rows) {
    Json r{{"n", row.n},
           {"piR2", row.piR2},
           {"kind", row.kind},
           {"lambda0", row.lambda0},
           {"lambda0_recursive", row.lambda0_recursive}};
    if (row.norm_computed) {
      r["lambda0_direct"] = row.lambda0_direct;
      r["norm"] = row.norm;
      r["argmax_k"] = row.argmax_k;
      r["tail_bound"] = row.tail_bound;
      r["ratio_norm"] = number_or_null(row.ratio_norm);
    } else {
      for (const char* key : {"lambda0_direct", "norm", "argmax_k", "tail_bound", "ratio_norm"}) r[key] = nullptr;
    }
    r["ratio_lambda0"] = number_or_null(row.ratio_lambda0);
    r["in_range"] = row.in_range;
    r["fup_product"] = row.fup_product ? Json(*row.fup_product) : Json(nullptr);
    rows.push_back(std::move(r));
  }
  Json per_n = Json::array();
  for (const RatioStats& stats : report.per_n) per_n.push_back(to_json(stats));
  auto envelope = [](const Envelope& e) { return Json{{"c1_emp", e.c1_emp}, {"c2_emp", e.c2_emp}}; };
  return Json{{"rows", rows},
              {"envelope", envelope(report.envelope)},
              {"envelope_lambda0", envelope(report.envelope_lambda0)},
              {"per_n", per_n}};
}

IntervalUnion interval_union_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("intervals") || !j.at("intervals").is_array()) {
    throw ValidationError("expected {\"intervals\": [[a, b], ...]}");
  }
  std::vector<Interval> pieces;
  for (const Json& pair : j.at("intervals")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ValidationError("each interval must be a pair of numbers");
    }
    pieces.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return IntervalUnion::from_pieces(std::move(pieces));
}

CantorSpec cantor_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw ValidationError("expected {\"L\": number, \"n\": integer}");
  }
  return CantorSpec(number_at(j, "L"), j.at("n").get<int>());
}

Spectrum spectrum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambdas") || !j.at("lambdas").is_array()) {
    throw ValidationError("expected a spectrum object with \"lambdas\"");
  }
  Spectrum s;
  for (const Json& v : j.at("lambdas")) {
    if (!v.is_number()) throw ValidationError("eigenvalues must be numbers");
    s.lambdas.push_back(v.get<double>());
  }
  s.tail_bound = number_at(j, "tail_bound");
  if (j.contains("K") && j.at("K").get<Index>() != s.K()) throw ValidationError("K does not match the eigenvalue count");
  return s;
}

std::string to_csv(const Spectrum& s) {
  std::string out = std::string(kSpectrumCsvHeader) + "\n";
  for (std::size_t k = 0; k < s.lambdas.size(); ++k) {
    out += CsvLine().integer(static_cast<long long>(k)).number(s.lambdas[k]).str();
  }
  return out;
}

std::string to_csv(const RingReport& report) {
  std::string out = std::string(kRingCsvHeader) + "\n";
  for (const RingRow& row : report.rows) {
    CsvLine line;
    line.number(row.piR2).field(csv_bool(row.skipped));
    if (row.skipped) {
      for (int i = 0; i < 8; ++i) line.empty();
    } else {
      line.number(row.norm)
          .integer(row.argmax_k)
          .number(row.stirling_lower)
          .number(row.stirling_upper)
          .number(row.analytic_lower)
          .number(row.analytic_upper)
          .number(row.asym_residual)
          .field(csv_bool(row.argmax_adjacent));
    }
    out += line.field(row.note).str();
  }
  return out;
}

std::string to_csv(const CombReport& report) {
  std::string out = std::string(kCombCsvHeader) + "\n";
  for (const CombRow& row : report.rows) {
    out += CsvLine()
               .number(row.s)
               .number(row.lambda0)
               .number(row.norm)
               .number(row.lower)
               .number(row.upper)
               .integer(row.argmax_k)
               .str();
  }
  return out;
}

std::string to_csv(const CantorReport& report) {
  std::string out = std::string(kCantorCsvHeader) + "\n";
  for (const CantorRow& row : report.rows) {
    CsvLine line;
    line.integer(row.n).number(row.piR2).field(row.kind).number(row.lambda0);
    if (row.norm_computed) {
      line.number(row.lambda0_direct).number(row.lambda0_recursive).number(row.norm).integer(row.argmax_k);
      line.number(row.tail_bound).number(row.ratio_norm);
    } else {
      line.empty().number(row.lambda0_recursive).empty().empty().empty().empty();
    }
    line.number(row.ratio_lambda0).field(csv_bool(row.in_range));
    if (row.fup_product) {
      line.number(*row.fup_product);
    } else {
      line.empty();
    }
    out += line.str();
  }
  return out;
}

}  // namespace daubloc::io
