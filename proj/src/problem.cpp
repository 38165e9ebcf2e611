#include "nullkit/problem.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <vector>

namespace nullkit {

namespace {

struct Entry {
  std::string key;
  std::string value;
  // Source position of every character in value.
  std::vector<std::pair<std::size_t, std::size_t>> where;
  std::size_t line = 0;
  std::size_t col = 0;
};

[[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Entry> split_entries(std::string_view text) {
  std::vector<Entry> entries;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    const std::size_t next = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) {
      pos = next;
      continue;
    }
    auto append = [&](Entry& e, std::size_t from) {
      for (std::size_t i = from; i < line.size(); ++i) {
        e.value.push_back(line[i]);
        e.where.emplace_back(lineno, i + 1);
      }
    };
    if (first > 0) {
      if (entries.empty()) fail_at(lineno, first + 1, "continuation line without a preceding entry");
      auto& e = entries.back();
      e.value.push_back(' ');
      e.where.emplace_back(lineno, first);
      append(e, first);
    } else {
      std::size_t k = 0;
      while (k < line.size() && !is_space(line[k]) && line[k] != ':') ++k;
      Entry e;
      e.key = std::string(line.substr(0, k));
      e.line = lineno;
      e.col = 1;
      if (k < line.size() && line[k] == ':') ++k;
      append(e, k);
      entries.push_back(std::move(e));
    }
    pos = next;
  }
  return entries;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return std::string(s.substr(a, b - a));
}

std::pair<std::size_t, std::size_t> position(const Entry& e, std::size_t offset) {
  if (e.where.empty()) return {e.line, e.col + e.key.size()};
  return e.where[std::min(offset, e.where.size() - 1)];
}

std::size_t first_non_space(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

FieldPtr field_entry(const Entry& e) {
  const std::string text = trim(e.value);
  const auto [l, c] = position(e, first_non_space(e.value));
  if (text.empty()) fail_at(l, c, "'" + e.key + "' needs a field such as GF(2)");
  try {
    return parse_field(text);
  } catch (const Error& err) {
    fail_at(l, c, err.message());
  }
}

std::vector<std::string> vars_entry(const Entry& e) {
  std::vector<std::string> vars;
  std::size_t i = 0;
  const std::string& v = e.value;
  while (i < v.size()) {
    if (is_space(v[i]) || v[i] == ',') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < v.size() && !is_space(v[i]) && v[i] != ',') ++i;
    std::string name = v.substr(start, i - start);
    const auto [l, c] = position(e, start);
    const bool ident = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                       std::all_of(name.begin(), name.end(),
                                   [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
    if (!ident) fail_at(l, c, "'" + name + "' is not a variable name");
    if (name == "t") fail_at(l, c, "'t' is reserved for extension field literals");
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) fail_at(l, c, "duplicate variable '" + name + "'");
    vars.push_back(std::move(name));
  }
  if (vars.empty()) {
    const auto [l, c] = position(e, 0);
    fail_at(l, c, "'vars' needs at least one variable");
  }
  if (vars.size() > kMaxVars) {
    const auto [l, c] = position(e, 0);
    fail_at(l, c, "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  return vars;
}

std::vector<Polynomial> ideal_entry(const Entry& e, const RingPtr& ring) {
  static const std::regex column_re(R"( at column (\d+))");
  std::vector<Polynomial> gens;
  const std::string& v = e.value;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    const char ch = i < v.size() ? v[i] : ',';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch != ',' || depth > 0) continue;
    const std::string piece = v.substr(start, i - start);
    const std::size_t lead = first_non_space(piece);
    if (lead == piece.size()) {
      // Only the final slot may be blank: an empty list or a trailing comma.
      if (i < v.size()) {
        const auto [l, c] = position(e, start);
        fail_at(l, c, "empty generator");
      }
    } else {
      try {
        gens.push_back(parse_polynomial(piece, ring));
      } catch (const Error& err) {
        std::string msg = err.message();
        std::size_t offset = start + lead;
        std::smatch m;
        if (std::regex_search(msg, m, column_re)) {
          offset = start + std::stoul(m[1].str()) - 1;
          msg = m.prefix().str() + m.suffix().str();
        }
        const auto [l, c] = position(e, offset);
        if (err.kind() == ErrorKind::UnknownVariable) msg = "unknown variable " + msg;
        fail_at(l, c, msg);
      }
    }
    start = i + 1;
  }
  return gens;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::optional<Entry> field, coeffs, points, vars, ideal;
  for (auto& e : split_entries(text)) {
    std::optional<Entry>* slot = nullptr;
    if (e.key == "field" || e.key == "base") slot = &field;
    else if (e.key == "coeffs") slot = &coeffs;
    else if (e.key == "points") slot = &points;
    else if (e.key == "vars") slot = &vars;
    else if (e.key == "ideal") slot = &ideal;
    else fail_at(e.line, e.col, "unknown key '" + e.key + "' (expected field, base, coeffs, points, vars or ideal)");
    if (slot->has_value())
      fail_at(e.line, e.col, "'" + e.key + "' given twice (first on line " + std::to_string((*slot)->line) + ")");
    *slot = std::move(e);
  }
  const std::size_t last_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  if (!field) fail_at(last_line, 1, "missing 'field' declaration");
  if (!vars) fail_at(last_line, 1, "missing 'vars' declaration");
  if (!ideal) fail_at(last_line, 1, "missing 'ideal:' section");

  const FieldPtr base = field_entry(*field);
  const FieldPtr cf = coeffs ? field_entry(*coeffs) : base;
  const FieldPtr pf = points ? field_entry(*points) : base;
  if (!embeds_into(*base, *cf) || !embeds_into(*base, *pf))
    throw Error(ErrorKind::InconsistentTower, "base field " + base->name() + " must embed into " + cf->name() +
                                                  " and " + pf->name());
  if (!embeds_into(*cf, *pf) && !embeds_into(*pf, *cf))
    throw Error(ErrorKind::InconsistentTower, cf->name() + " and " + pf->name() + " are not nested");

  RingPtr ring = make_ring(cf, vars_entry(*vars));
  auto gens = ideal_entry(*ideal, ring);
  return Problem{base, cf, pf, ring, Ideal(ring, std::move(gens))};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string Problem::emit() const {
  std::ostringstream out;
  out << "field " << base->name() << "\n";
  if (!same_field(coeffs, base)) out << "coeffs " << coeffs->name() << "\n";
  if (!same_field(points, base)) out << "points " << points->name() << "\n";
  out << "vars";
  for (const auto& v : ring->vars) out << ' ' << v;
  out << "\nideal:";
  const auto& gens = ideal.gens();
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : " ") << gens[i].to_string();
  out << "\n";
  return out.str();
}

}  // namespace nullkit
