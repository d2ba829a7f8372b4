#include "gridups/grid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "json.hpp"

#include "gridups/errors.hpp"

namespace gridups {

namespace {

// Set once by evaluating Upsilon(1/2) on the unmirrored T(2,3) layout, which
// comes out at +1/2.
constexpr bool kMirrorTorusPreset = true;

bool is_permutation_of_range(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int r : v) {
    if (r < 0 || r >= static_cast<int>(v.size()) || seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) inv[perm[c]] = static_cast<int>(c);
  return inv;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string_view::npos) next = s.size();
    std::string_view tok = s.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError("malformed integer list '" + std::string(s) + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

GridDiagram checked(int n, std::vector<int> xs, std::vector<int> os) {
  if (n < 2) throw DomainError("grid number must be at least 2");
  if (static_cast<int>(xs.size()) != n) throw DomainError("X has " + std::to_string(xs.size()) + " entries, expected " + std::to_string(n));
  if (static_cast<int>(os.size()) != n) throw DomainError("O has " + std::to_string(os.size()) + " entries, expected " + std::to_string(n));
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram parse_compact(std::string_view text) {
  // n;X:a,b,...;O:c,d,...
  auto s1 = text.find(';');
  auto s2 = s1 == std::string_view::npos ? s1 : text.find(';', s1 + 1);
  if (s2 == std::string_view::npos) throw DomainError("malformed grid text");
  std::string_view head = text.substr(0, s1);
  std::string_view xpart = text.substr(s1 + 1, s2 - s1 - 1);
  std::string_view opart = text.substr(s2 + 1);
  while (!opart.empty() && (opart.back() == '\n' || opart.back() == '\r' || opart.back() == ' ')) {
    opart.remove_suffix(1);
  }
  if (xpart.substr(0, 2) != "X:" || opart.substr(0, 2) != "O:") {
    throw DomainError("malformed grid text: expected X: and O: sections");
  }
  auto n = parse_int_list(head);
  if (n.size() != 1) throw DomainError("malformed grid text: bad grid number");
  return checked(n[0], parse_int_list(xpart.substr(2)), parse_int_list(opart.substr(2)));
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> x_rows, std::vector<int> o_rows)
    : x_rows_(std::move(x_rows)), o_rows_(std::move(o_rows)) {
  if (x_rows_.size() != o_rows_.size()) throw DomainError("X and O have different lengths");
  if (x_rows_.size() < 2) throw DomainError("grid number must be at least 2");
  if (!is_permutation_of_range(x_rows_)) throw DomainError("x_rows not a permutation");
  if (!is_permutation_of_range(o_rows_)) throw DomainError("o_rows not a permutation");
  for (std::size_t c = 0; c < x_rows_.size(); ++c) {
    if (x_rows_[c] == o_rows_[c]) {
      throw DomainError("X and O share square in column " + std::to_string(c));
    }
  }
  x_cols_ = inverse(x_rows_);
  o_cols_ = inverse(o_rows_);
}

GridDiagram parse_grid(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw DomainError("empty grid text");
  if (text[first] != '{') return parse_compact(text.substr(first));

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed grid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("X") || !j.contains("O")) {
    throw DomainError("grid JSON needs fields n, X, O");
  }
  try {
    return checked(j.at("n").get<int>(), j.at("X").get<std::vector<int>>(),
                   j.at("O").get<std::vector<int>>());
  } catch (const nlohmann::json::type_error& e) {
    throw DomainError(std::string("malformed grid JSON: ") + e.what());
  }
}

std::string serialize_grid(const GridDiagram& d) {
  nlohmann::ordered_json j;
  j["n"] = d.size();
  j["X"] = d.x_rows();
  j["O"] = d.o_rows();
  return j.dump();
}

int component_count(const GridDiagram& d) {
  const int n = d.size();
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    // From column c: up the column to its O, along that row to its X.
    for (int c = start; !seen[c]; c = d.x_col(d.o_rows()[c])) seen[c] = 1;
  }
  return cycles;
}

GridDiagram mirror(const GridDiagram& d) {
  std::vector<int> xs(d.x_rows().rbegin(), d.x_rows().rend());
  std::vector<int> os(d.o_rows().rbegin(), d.o_rows().rend());
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram cyclic_permute(const GridDiagram& d, Axis axis, int k) {
  const int n = d.size();
  std::vector<int> xs(n), os(n);
  for (int c = 0; c < n; ++c) {
    if (axis == Axis::rows) {
      xs[c] = mod(d.x_rows()[c] + k, n);
      os[c] = mod(d.o_rows()[c] + k, n);
    } else {
      xs[mod(c + k, n)] = d.x_rows()[c];
      os[mod(c + k, n)] = d.o_rows()[c];
    }
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram preset_unknot(int n) {
  if (n < 2) throw DomainError("unknot preset needs n >= 2");
  std::vector<int> xs(n), os(n);
  for (int c = 0; c < n; ++c) {
    xs[c] = c;
    os[c] = mod(c - 1, n);
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram preset_torus(int p, int q) {
  if (p < 2 || q < 2) throw DomainError("torus preset needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus preset needs gcd(p, q) = 1");
  const int n = p + q;
  std::vector<int> xs(n), os(n);
  for (int c = 0; c < n; ++c) {
    os[c] = c;
    xs[c] = (c + q) % n;
  }
  GridDiagram d(std::move(xs), std::move(os));
  return kMirrorTorusPreset ? mirror(d) : d;
}

}  // namespace gridups
