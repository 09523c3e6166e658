#include "azeta/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "azeta/errors.hpp"

namespace azeta {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

i64 parse_int(std::string_view s, int line, const std::string& key) {
  s = trim(s);
  i64 v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "value of '" + key + "' is not an integer: '" + std::string(s) + "'");
  return v;
}

LatticeVector parse_vector(std::string_view s, int line, const std::string& key) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos)
    throw ParseError(line, "value of '" + key + "' must have the form x,y");
  return {parse_int(s.substr(0, comma), line, key), parse_int(s.substr(comma + 1), line, key)};
}

struct Entry {
  std::string value;
  int line;
};

}  // namespace

QuotientSpecFile parse_spec(std::string_view text) {
  static const std::set<std::string> known{"root_system", "kind", "v1", "v2", "alpha", "beta", "a", "b", "m", "order"};
  std::map<std::string, Entry> kv;
  int line_no = 0;
  int last = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (!known.count(key)) throw ParseError(line_no, "unknown key '" + key + "'");
    if (kv.count(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");
    kv[key] = {value, line_no};
    last = line_no;
  }
  auto need = [&](const std::string& key) -> const Entry& {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(last, "missing key '" + key + "'");
    return it->second;
  };

  QuotientSpecFile out;
  const Entry& rs = need("root_system");
  try {
    out.group.root = parse_root_kind(rs.value);
  } catch (const ValidationError& e) {
    throw ParseError(rs.line, e.what());
  }
  const Entry& kind = need("kind");
  std::set<std::string> allowed{"root_system", "kind", "order"};
  if (kind.value == "torus") {
    allowed.insert({"v1", "v2"});
  } else if (kind.value == "klein") {
    allowed.insert({"alpha", "beta", "a", "b", "m"});
  } else {
    throw ParseError(kind.line, "kind must be torus or klein");
  }
  for (const auto& [key, e] : kv)
    if (!allowed.count(key)) throw ParseError(e.line, "key '" + key + "' is not allowed for kind " + kind.value);

  if (kind.value == "torus") {
    const Entry& v1 = need("v1");
    const Entry& v2 = need("v2");
    out.group.data = TorusSpec{parse_vector(v1.value, v1.line, "v1"), parse_vector(v2.value, v2.line, "v2")};
  } else {
    KleinSpec k;
    const Entry& al = need("alpha");
    const Entry& be = need("beta");
    k.alpha = parse_vector(al.value, al.line, "alpha");
    k.beta = parse_vector(be.value, be.line, "beta");
    k.a = parse_int(need("a").value, need("a").line, "a");
    k.b = parse_int(need("b").value, need("b").line, "b");
    k.m = parse_int(need("m").value, need("m").line, "m");
    out.group.data = k;
  }
  if (auto it = kv.find("order"); it != kv.end()) {
    const i64 o = parse_int(it->second.value, it->second.line, "order");
    if (o < 1 || o > 100000) throw ParseError(it->second.line, "order must be between 1 and 100000");
    out.order = static_cast<int>(o);
  }
  return out;
}

QuotientSpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string format_spec(const GroupSpec& spec, std::optional<int> order) {
  auto vec = [](LatticeVector v) { return std::to_string(v.x) + "," + std::to_string(v.y); };
  std::ostringstream os;
  os << "root_system = " << to_string(spec.root) << "\n";
  if (const auto* t = std::get_if<TorusSpec>(&spec.data)) {
    os << "kind = torus\n"
       << "v1 = " << vec(t->v1) << "\n"
       << "v2 = " << vec(t->v2) << "\n";
  } else {
    const auto& k = std::get<KleinSpec>(spec.data);
    os << "kind = klein\n"
       << "alpha = " << vec(k.alpha) << "\n"
       << "beta = " << vec(k.beta) << "\n"
       << "a = " << k.a << "\nb = " << k.b << "\nm = " << k.m << "\n";
  }
  if (order) os << "order = " << *order << "\n";
  return os.str();
}

}  // namespace azeta
