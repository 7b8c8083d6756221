#include "raney/lattice_io.hpp"

namespace raney {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::parse_error, message);
}

std::size_t index_value(const json& v, std::size_t n, const char* what) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) fail(std::string(what) + " must be an integer");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= n) {
    fail(std::string(what) + " index " + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(i);
}

}  // namespace

Lattice parse_lattice(std::string_view text, std::size_t max_size) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("lattice file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "elements" && key != "covers" && key != "leq") fail("unknown key '" + key + "'");
  }
  const bool has_covers = doc.contains("covers");
  const bool has_leq = doc.contains("leq");
  if (has_covers == has_leq) fail("exactly one of 'covers' or 'leq' is required");

  std::vector<std::string> names;
  if (doc.contains("elements")) {
    const json& elements = doc["elements"];
    if (!elements.is_array()) fail("'elements' must be an array of strings");
    for (const auto& e : elements) {
      if (!e.is_string()) fail("'elements' must be an array of strings");
      names.push_back(e.get<std::string>());
    }
  } else if (has_covers) {
    fail("'elements' is required with 'covers'");
  }

  if (has_covers) {
    const std::size_t n = names.size();
    if (n > max_size) {
      throw Error(ErrorCode::size_limit, "lattice has " + std::to_string(n) +
                                             " elements, limit is " + std::to_string(max_size));
    }
    const json& covers = doc["covers"];
    if (!covers.is_array()) fail("'covers' must be an array of index pairs");
    std::vector<std::pair<Elem, Elem>> pairs;
    for (const auto& c : covers) {
      if (!c.is_array() || c.size() != 2) fail("each cover must be a pair [i, j]");
      const auto lo = index_value(c[0], n, "cover");
      const auto hi = index_value(c[1], n, "cover");
      if (lo == hi) {
        throw Error(ErrorCode::not_a_partial_order, "element '" + names[lo] + "' covers itself");
      }
      pairs.emplace_back(static_cast<Elem>(lo), static_cast<Elem>(hi));
    }
    return Lattice::from_order(Poset::from_covers(n, pairs, std::move(names)), max_size);
  }

  const json& rows = doc["leq"];
  if (!rows.is_array()) fail("'leq' must be a square boolean matrix");
  const std::size_t n = rows.size();
  if (!names.empty() && names.size() != n) fail("'elements' and 'leq' disagree on size");
  if (n > max_size) {
    throw Error(ErrorCode::size_limit, "lattice has " + std::to_string(n) +
                                           " elements, limit is " + std::to_string(max_size));
  }
  std::vector<char> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const json& row = rows[a];
    if (!row.is_array() || row.size() != n) fail("'leq' must be a square boolean matrix");
    for (std::size_t b = 0; b < n; ++b) {
      if (!row[b].is_boolean()) fail("'leq' entries must be booleans");
      m[a * n + b] = row[b].get<bool>() ? 1 : 0;
    }
  }
  return Lattice::from_order(Poset(n, std::move(m), std::move(names)), max_size);
}

json lattice_to_json(const Lattice& lattice) {
  json covers = json::array();
  for (auto [lo, hi] : lattice.order().covers()) covers.push_back({lo, hi});
  return json{{"elements", lattice.order().names()}, {"covers", std::move(covers)}};
}

std::string to_lattice_file(const Lattice& lattice) {
  return lattice_to_json(lattice).dump() + "\n";
}

}  // namespace raney
