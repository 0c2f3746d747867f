#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "regkit/regularity.hpp"

namespace regkit {

/// One result line: {graph, s, value, method, certificate_W, certificate_l,
/// char, millis, status}, plus lower_bound and note when present.
struct RunRecord {
  std::string graph;
  unsigned s = 1;
  std::optional<int> value;
  std::string method;
  std::optional<std::vector<std::string>> certificate_w;
  std::optional<int> certificate_l;
  unsigned characteristic = 2;
  std::int64_t millis = 0;
  std::string status = "ok";  ///< ok, partial, PASS, FAIL, SKIPPED, ERROR
  std::optional<int> lower_bound;
  std::string note;
};

inline RunRecord make_record(std::string graph, unsigned s, const RegularityResult& r, bool with_certificate) {
  RunRecord rec;
  rec.graph = std::move(graph);
  rec.s = s;
  rec.value = r.value;
  rec.method = method_name(r.method);
  rec.characteristic = r.characteristic;
  if (with_certificate && r.certificate) {
    rec.certificate_w = r.certificate->names;
    rec.certificate_l = r.certificate->l;
  }
  return rec;
}

inline RunRecord make_partial_record(std::string graph, unsigned s, unsigned p, const BudgetExceeded& e) {
  RunRecord rec;
  rec.graph = std::move(graph);
  rec.s = s;
  rec.characteristic = p;
  rec.status = "partial";
  rec.lower_bound = e.lower_bound();
  rec.note = e.unexplored();
  return rec;
}

inline nlohmann::ordered_json to_json(const RunRecord& r, bool with_millis = true) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph;
  j["s"] = r.s;
  j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
  j["method"] = r.method;
  j["certificate_W"] = r.certificate_w ? nlohmann::ordered_json(*r.certificate_w) : nlohmann::ordered_json(nullptr);
  j["certificate_l"] = r.certificate_l ? nlohmann::ordered_json(*r.certificate_l) : nlohmann::ordered_json(nullptr);
  j["char"] = r.characteristic;
  if (with_millis) j["millis"] = r.millis;
  j["status"] = r.status;
  if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline std::string csv_header() { return "graph,s,value,method,certificate_W,certificate_l,char,millis,status"; }

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string to_csv(const RunRecord& r) {
  std::ostringstream os;
  std::string w;
  if (r.certificate_w)
    for (std::size_t i = 0; i < r.certificate_w->size(); ++i) w += (i ? " " : "") + (*r.certificate_w)[i];
  os << csv_quote(r.graph) << ',' << r.s << ',' << (r.value ? std::to_string(*r.value) : "") << ',' << r.method << ','
     << csv_quote(w) << ',' << (r.certificate_l ? std::to_string(*r.certificate_l) : "") << ',' << r.characteristic
     << ',' << r.millis << ',' << r.status;
  return os.str();
}

inline std::string to_text(const RunRecord& r) {
  std::ostringstream os;
  os << r.graph << "  s=" << r.s << "  ";
  if (r.value)
    os << "reg=" << *r.value << " (" << r.method << ")";
  else if (r.lower_bound)
    os << "reg>=" << *r.lower_bound;
  if (r.certificate_w) {
    os << "  W={";
    for (std::size_t i = 0; i < r.certificate_w->size(); ++i) os << (i ? "," : "") << (*r.certificate_w)[i];
    os << "} l=" << r.certificate_l.value_or(-1);
  }
  os << "  char=" << r.characteristic << "  " << r.millis << "ms  " << r.status;
  if (!r.note.empty()) os << "  [" << r.note << "]";
  return os.str();
}

}  // namespace regkit
