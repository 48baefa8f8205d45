#include "qlsmodcat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

std::string blocks_to_string(const SimpleModulesResult& s) {
  std::string out = "J" + std::to_string(s.dim_radical);
  if (!s.split) return out + " not split";
  for (std::size_t i = 0; i < s.blocks.size(); ++i) out += (i ? "+M" : " M") + std::to_string(s.blocks[i]);
  return out;
}

Simplicity simplicity_from_string(const std::string& s) {
  for (auto v : {Simplicity::SplitSimple, Simplicity::Reducible, Simplicity::Undecided})
    if (to_string(v) == s) return v;
  throw Error(ErrorKind::ParseError, "unknown simplicity verdict '" + s + "'");
}

Json classification_to_json(const ClassificationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json reps = Json::array();
    for (const auto& x : row.reps) {
      reps.push_back(Json{{"params", params_to_string(x.datum)},
                          {"modcat", modcat_to_json(x.datum)},
                          {"dim", x.dim},
                          {"simplicity", to_string(x.verdict)},
                          {"coinvariants", x.coinvariants},
                          {"radical", x.modules.dim_radical},
                          {"semisimple", x.modules.dim_semisimple},
                          {"split", x.modules.split},
                          {"blocks", x.modules.blocks},
                          {"advice", x.modules.advice}});
    }
    rows.push_back(Json{{"F", row.F},
                        {"psi_class", row.psi_class},
                        {"W", row.W},
                        {"general_W", row.general_W},
                        {"count", row.reps.size()},
                        {"free_params", row.free_params},
                        {"dim", row.dim},
                        {"representatives", reps}});
  }
  return Json{{"kind", "classification"},
              {"datum", r.datum},
              {"rows", rows},
              {"totals", {{"rows", r.rows.size()}, {"representatives", r.total}}},
              {"notes", r.notes}};
}

ClassificationReport classification_from_json(const QlsDatum& d, const Json& j) {
  ClassificationReport r;
  r.datum = j.at("datum").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    ClassificationRow out;
    out.F = row.at("F").get<std::string>();
    out.psi_class = row.at("psi_class").get<std::string>();
    out.W = row.at("W").get<std::string>();
    out.general_W = row.at("general_W").get<bool>();
    out.free_params = row.at("free_params").get<int>();
    out.dim = row.at("dim").get<std::size_t>();
    for (const auto& x : row.at("representatives")) {
      RepresentativeInfo info{modcat_from_json(d, x.at("modcat")), x.at("dim").get<std::size_t>(),
                              simplicity_from_string(x.at("simplicity").get<std::string>()),
                              x.at("coinvariants").get<std::size_t>(), {}};
      info.modules.dim_radical = x.at("radical").get<std::size_t>();
      info.modules.dim_semisimple = x.at("semisimple").get<std::size_t>();
      info.modules.split = x.at("split").get<bool>();
      info.modules.blocks = x.at("blocks").get<std::vector<int>>();
      info.modules.advice = x.at("advice").get<std::string>();
      out.reps.push_back(std::move(info));
    }
    r.total += out.reps.size();
    r.rows.push_back(std::move(out));
  }
  return r;
}

std::string classification_to_text(const ClassificationReport& r) {
  const std::vector<std::string> head{"#", "F", "psi", "W", "reps", "free", "dim", "simplicity", "representatives"};
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    std::string verdict = row.reps.empty() ? "-" : to_string(row.reps.front().verdict);
    for (const auto& x : row.reps)
      if (to_string(x.verdict) != verdict) verdict = "mixed";
    std::string reps;
    for (std::size_t k = 0; k < row.reps.size(); ++k)
      reps += (k ? "; " : "") + params_to_string(row.reps[k].datum) + " " + blocks_to_string(row.reps[k].modules);
    cells.push_back({std::to_string(i + 1), row.F, row.psi_class, row.W, std::to_string(row.reps.size()),
                     std::to_string(row.free_params), std::to_string(row.dim), verdict, reps});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << "classification of " << r.datum << "\n";
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c) os << " | ";
      if (c + 1 == v.size()) os << v[c];
      else if (c == 0 || c == 4 || c == 5 || c == 6) os << std::setw(static_cast<int>(width[c])) << v[c];
      else os << std::left << std::setw(static_cast<int>(width[c])) << v[c] << std::right;
    }
    os << "\n";
  };
  line(head);
  for (const auto& row : cells) line(row);
  os << "total: " << r.total << " representatives in " << r.rows.size() << " rows\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace qlsmodcat
