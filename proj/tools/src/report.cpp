#include "zetahess_cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace zetahess::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format: " + name);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Reported: return "reported";
  }
  return "?";
}

ReportRow equality_row(CaseKey key, std::string check, const SPoly& lhs, const SPoly& rhs) {
  const SPoly r = lhs - rhs;
  return {std::move(key), std::move(check), r.is_zero() ? Status::Pass : Status::Fail,
          lhs.to_string(), rhs.to_string(), r.to_string()};
}

ReportRow reported_row(CaseKey key, std::string check, const SPoly& lhs, const SPoly& rhs) {
  ReportRow row = equality_row(std::move(key), std::move(check), lhs, rhs);
  if (row.status == Status::Fail) row.status = Status::Reported;
  return row;
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const ReportRow& r) { return r.status == s; }));
}

void VerificationReport::sort() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.key < b.key; });
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["command"] = rep.command;
  j["seed"] = rep.seed;
  j["summary"] = {{"pass", rep.count(Status::Pass)},
                  {"fail", rep.count(Status::Fail)},
                  {"reported", rep.count(Status::Reported)}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json row;
    row["case"] = {{"operator", r.key.op}, {"n", r.key.n}, {"p", r.key.p},
                   {"trial", r.key.trial}, {"seed", r.key.seed}};
    row["check"] = r.check;
    row["status"] = to_string(r.status);
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["residual"] = r.residual;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const VerificationReport& rep, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      return render_json(rep);
    case Format::Csv:
      os << "operator,n,p,trial,seed,check,status,lhs,rhs,residual\n";
      for (const auto& r : rep.rows)
        os << csv_field(r.key.op) << ',' << r.key.n << ',' << r.key.p << ',' << r.key.trial << ','
           << r.key.seed << ',' << csv_field(r.check) << ',' << to_string(r.status) << ','
           << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.residual) << '\n';
      return os.str();
    case Format::Text:
      for (const auto& r : rep.rows) {
        std::string tag = to_string(r.status);
        std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
        os << tag << "  " << r.key.op << " n=" << r.key.n << " p=" << r.key.p << " trial=" << r.key.trial
           << "  " << r.check << "  residual=" << r.residual;
        if (r.status != Status::Pass) os << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
        os << '\n';
      }
      os << "summary: pass=" << rep.count(Status::Pass) << " fail=" << rep.count(Status::Fail)
         << " reported=" << rep.count(Status::Reported) << '\n';
      return os.str();
  }
  return {};
}

}  // namespace zetahess::cli
