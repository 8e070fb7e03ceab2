#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <system_error>

#include <json.hpp>

#include "trigint/harness.hpp"

namespace trigint {
namespace {

using nlohmann::json;

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

json real_or_null(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::optional<double> optional_real(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

constexpr const char* kUnderflowMark = "underflow";

}  // namespace

std::string report_to_csv(const ExperimentReport& report) {
  std::string out(kCsvHeader);
  if (report.motornyi_column) out += ",motornyi_main_term";
  out += '\n';
  for (const ReportRow& r : report.rows) {
    out += csv_field(r.psi) + ',' + csv_field(r.beta) + ',' + r.p.to_string() + ',' + std::to_string(r.n) + ',' +
           format_real(r.delta) + ',' + format_real(r.empirical_lower) + ',' + format_real(r.bracket_lower) + ',' +
           format_real(r.bracket_upper) + ',' + format_real(r.prediction_main) + ',' +
           (r.underflow ? std::string(kUnderflowMark) : format_optional(r.ratio)) + ',' + format_real(r.tail) + ',' +
           format_optional(r.eps_n);
    if (report.motornyi_column) out += ',' + format_optional(r.motornyi);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const ExperimentReport& report) {
  json rows = json::array();
  for (const ReportRow& r : report.rows) {
    json row{
        {"psi", r.psi},
        {"beta", r.beta},
        {"p", r.p.is_infinite() ? json("inf") : json(r.p.value())},
        {"n", r.n},
        {"delta", r.delta},
        {"empirical_lower", r.empirical_lower},
        {"bracket_lower", r.bracket_lower},
        {"bracket_upper", r.bracket_upper},
        {"prediction_main", r.prediction_main},
        {"ratio", r.underflow ? json(kUnderflowMark) : real_or_null(r.ratio)},
        {"tail", r.tail},
        {"eps_n", real_or_null(r.eps_n)},
    };
    if (report.motornyi_column) row["motornyi_main_term"] = real_or_null(r.motornyi);
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}}.dump(2) + '\n';
}

ExperimentReport report_from_json(std::string_view text) {
  ExperimentReport report;
  const json doc = json::parse(text);
  for (const json& j : doc.at("rows")) {
    ReportRow r;
    j.at("psi").get_to(r.psi);
    j.at("beta").get_to(r.beta);
    const json& p = j.at("p");
    r.p = p.is_string() ? PNorm::parse(p.get<std::string>()) : PNorm(p.get<double>());
    j.at("n").get_to(r.n);
    j.at("delta").get_to(r.delta);
    j.at("empirical_lower").get_to(r.empirical_lower);
    j.at("bracket_lower").get_to(r.bracket_lower);
    j.at("bracket_upper").get_to(r.bracket_upper);
    j.at("prediction_main").get_to(r.prediction_main);
    const json& ratio = j.at("ratio");
    r.underflow = ratio.is_string() && ratio.get<std::string>() == kUnderflowMark;
    if (!r.underflow) r.ratio = optional_real(ratio);
    j.at("tail").get_to(r.tail);
    r.eps_n = optional_real(j.at("eps_n"));
    if (j.contains("motornyi_main_term")) {
      report.motornyi_column = true;
      r.motornyi = optional_real(j.at("motornyi_main_term"));
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

std::string report_to_gnuplot(const ExperimentReport& report) {
  // One data block per p, separated by two blank lines (gnuplot "index").
  std::map<PNorm, std::vector<const ReportRow*>> blocks;
  for (const ReportRow& r : report.rows) blocks[r.p].push_back(&r);
  std::string out;
  bool first = true;
  for (const auto& [p, rows] : blocks) {
    if (!first) out += "\n\n";
    first = false;
    out += "# p = " + p.to_string() + "\n# n ratio\n";
    for (const ReportRow* r : rows) {
      if (!r->ratio) continue;
      out += std::to_string(r->n) + ' ' + format_real(*r->ratio) + '\n';
    }
  }
  return out;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing (target '" + path.string() + "')");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move report into place at '" + path.string() + "'");
  }
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::filesystem::path& path) {
  if (report.rows.empty()) throw ConfigError("emit_report: report has no rows");
  write_file_atomically(path, format == ReportFormat::csv ? report_to_csv(report) : report_to_json(report));
}

std::vector<int> parse_int_list(std::string_view text) {
  auto parse_int = [&](std::string_view tok) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ConfigError("invalid integer '" + std::string(tok) + "' in list '" + std::string(text) + "'");
    return value;
  };
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view tok = text.substr(start, comma - start);
    if (const std::size_t dots = tok.find(".."); dots != std::string_view::npos) {
      const int lo = parse_int(tok.substr(0, dots));
      const int hi = parse_int(tok.substr(dots + 2));
      if (hi < lo) throw ConfigError("empty range '" + std::string(tok) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(tok));
    }
    start = comma + 1;
  }
  return out;
}

std::vector<PNorm> parse_p_list(std::string_view text) {
  std::vector<PNorm> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string tok(text.substr(start, comma - start));
    try {
      out.push_back(PNorm::parse(tok));
    } catch (const std::exception&) {
      throw ConfigError("invalid norm exponent '" + tok + "' (need a real >= 1 or 'inf')");
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace trigint
