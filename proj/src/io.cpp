#include "isg/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace isg {

namespace {

using json = nlohmann::ordered_json;

// Relabels s by the given permutation of element indices (perm[old] = new).
FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<int>& perm) {
  FiniteSemigroup out;
  out.order = s.order;
  out.table.resize(s.table.size());
  for (int x = 0; x < s.order; ++x) {
    for (int y = 0; y < s.order; ++y) {
      out.table[perm[x] * s.order + perm[y]] = perm[s.mul(x, y)];
    }
  }
  if (s.zero) out.zero = perm[*s.zero];
  if (s.identity) out.identity = perm[*s.identity];
  if (s.has_names()) {
    out.names.resize(s.order);
    for (int x = 0; x < s.order; ++x) out.names[perm[x]] = s.names[x];
  }
  if (s.has_labels()) {
    out.labels.resize(s.order);
    for (int x = 0; x < s.order; ++x) out.labels[perm[x]] = s.labels[x];
  }
  return out;
}

}  // namespace

FiniteSemigroup document_to_semigroup(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw malformed_input_error("document parse error at byte " +
                                std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw malformed_input_error("document is not a JSON object");
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kDocumentVersion) {
    throw malformed_input_error("unsupported or missing document version");
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer() ||
      doc["order"].get<int>() <= 0) {
    throw malformed_input_error("missing or invalid 'order'");
  }
  const int order = doc["order"].get<int>();
  if (!doc.contains("table") || !doc["table"].is_array() ||
      doc["table"].size() != static_cast<size_t>(order) * order) {
    throw malformed_input_error("'table' must be a flat row-major array of order^2 entries");
  }
  std::vector<int> table;
  table.reserve(doc["table"].size());
  for (const auto& v : doc["table"]) {
    if (!v.is_number_integer()) {
      throw malformed_input_error("'table' entries must be integers");
    }
    table.push_back(v.get<int>());
  }
  std::optional<int> zero, identity;
  if (doc.contains("zero") && !doc["zero"].is_null()) zero = doc["zero"].get<int>();
  if (doc.contains("identity") && !doc["identity"].is_null()) {
    identity = doc["identity"].get<int>();
  }

  // validates entries, associativity and the markers
  FiniteSemigroup s = make_semigroup(order, std::move(table), zero, identity);

  if (doc.contains("names")) {
    if (!doc["names"].is_array() || doc["names"].size() != static_cast<size_t>(order)) {
      throw malformed_input_error("'names' must list one string per element");
    }
    for (const auto& v : doc["names"]) s.names.push_back(v.get<std::string>());
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || doc["labels"].size() != static_cast<size_t>(order)) {
      throw malformed_input_error("'labels' must list one entry per element");
    }
    for (const auto& v : doc["labels"]) {
      if (v.is_number_integer() && v.get<int>() == 0) {
        s.labels.push_back(BrandtLabel::zero());
      } else if (v.is_array() && v.size() == 3) {
        s.labels.push_back(
            BrandtLabel::triple(v[0].get<int>(), v[1].get<int>(), v[2].get<int>()));
      } else {
        throw malformed_input_error("'labels' entries must be 0 or [row, elem, col]");
      }
    }
  }

  if (s.zero && *s.zero != 0) {
    std::vector<int> perm(s.order);
    for (int x = 0; x < s.order; ++x) perm[x] = x;
    std::swap(perm[0], perm[*s.zero]);
    s = relabel(s, perm);
  }
  return s;
}

std::string semigroup_to_document(const FiniteSemigroup& s) {
  json doc;
  doc["version"] = kDocumentVersion;
  doc["order"] = s.order;
  doc["table"] = s.table;
  if (s.zero) doc["zero"] = *s.zero;
  if (s.identity) doc["identity"] = *s.identity;
  if (s.has_names()) doc["names"] = s.names;
  if (s.has_labels()) {
    json labels = json::array();
    for (const auto& label : s.labels) {
      if (label.is_zero()) {
        labels.push_back(0);
      } else {
        labels.push_back(json::array({label.row, label.elem, label.col}));
      }
    }
    doc["labels"] = std::move(labels);
  }
  return doc.dump(2) + "\n";
}

FiniteSemigroup load_semigroup(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw malformed_input_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return document_to_semigroup(text);
}

void store_semigroup(const FiniteSemigroup& s, const std::string& path) {
  const std::string text = semigroup_to_document(s);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw malformed_input_error("cannot open '" + path + "' for writing");
  }
  out << text;
}

std::string document_digest(const FiniteSemigroup& s) {
  const std::string text = semigroup_to_document(s);
  uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace isg
