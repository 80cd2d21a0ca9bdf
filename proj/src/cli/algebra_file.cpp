#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "modinv/cli.hpp"

namespace modinv {

namespace {

constexpr GroupCaps kFileGroupCaps{243};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Leading-whitespace count, for column bookkeeping.
std::size_t lead(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (q % p) ++p;
  unsigned s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, s);
}

// "p^n" or "N" with N a prime power; n = 0 allowed only through "p^0".
std::pair<unsigned, unsigned> parse_order_spec(const std::string& text, std::size_t column) {
  static const std::regex pn(R"((\d+)\^(\d+))"), plain(R"(\d+)");
  std::smatch m;
  if (std::regex_match(text, m, pn)) {
    const unsigned p = static_cast<unsigned>(std::stoul(m[1]));
    if (!is_prime(p)) throw ParseError("'" + m[1].str() + "' is not prime", column);
    return {p, static_cast<unsigned>(std::stoul(m[2]))};
  }
  if (std::regex_match(text, plain)) {
    const auto pp = prime_power(std::stoull(text));
    if (!pp) throw ParseError("group order " + text + " is not a prime power", column);
    return *pp;
  }
  throw ParseError("expected an order like 2^2 or 4, got '" + text + "'", column);
}

std::vector<std::vector<std::size_t>> parse_table_rows(const std::vector<std::string>& rows, std::size_t column) {
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : rows) {
    std::string r = row;
    for (auto& c : r)
      if (c == ',') c = ' ';
    std::istringstream is(r);
    std::vector<std::size_t> entries;
    std::string tok;
    while (is >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad Cayley table entry '" + tok + "'", column);
      entries.push_back(std::stoul(tok));
    }
    if (!entries.empty()) table.push_back(std::move(entries));
  }
  return table;
}

GroupPtr build_group(const std::string& text, unsigned p, const std::string& base_dir,
                     const std::optional<std::vector<std::size_t>>& gens, std::size_t column) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("group spec needs a kind, e.g. cyclic:2", column);
  const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
  const std::size_t acol = column + colon + 1;
  if (gens && kind != "cayley") throw ParseError("a gens line is only allowed with cayley groups", column);
  try {
    if (kind == "cyclic") {
      if (arg == "1") return group_cyclic(p, 0, kFileGroupCaps);
      const auto [q, n] = parse_order_spec(arg, acol);
      return group_cyclic(q, n, kFileGroupCaps);
    }
    if (kind == "elemab") {
      const auto [q, n] = parse_order_spec(arg, acol);
      return group_elemab(q, n, kFileGroupCaps).first;
    }
    if (kind == "product") {
      // (A)x(B) with balanced parentheses
      if (arg.empty() || arg[0] != '(') throw ParseError("product expects (A)x(B)", acol);
      int depth = 0;
      std::size_t close = std::string::npos;
      for (std::size_t i = 0; i < arg.size(); ++i) {
        if (arg[i] == '(') ++depth;
        if (arg[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close == std::string::npos || arg.compare(close + 1, 2, "x(") != 0 || arg.back() != ')')
        throw ParseError("product expects (A)x(B)", acol);
      const std::string a = arg.substr(1, close - 1), b = arg.substr(close + 3, arg.size() - close - 4);
      const GroupPtr ga = build_group(a, p, base_dir, std::nullopt, acol + 1);
      const GroupPtr gb = build_group(b, p, base_dir, std::nullopt, acol + close + 3);
      return group_product(*ga, *gb, kFileGroupCaps);
    }
    if (kind == "cayley") {
      std::vector<std::string> rows;
      if (!arg.empty() && arg[0] == '@') {
        const std::string path = arg.substr(1);
        const std::string full = !path.empty() && path[0] == '/' ? path : base_dir + "/" + path;
        std::ifstream in(full);
        if (!in) throw ParseError("cannot read Cayley table file '" + path + "'", acol);
        for (std::string line; std::getline(in, line);) {
          const auto hash = line.find('#');
          rows.push_back(hash == std::string::npos ? line : line.substr(0, hash));
        }
      } else if (arg.size() >= 2 && arg.front() == '[' && arg.back() == ']') {
        std::istringstream is(arg.substr(1, arg.size() - 2));
        for (std::string row; std::getline(is, row, ';');) rows.push_back(row);
      } else {
        throw ParseError("cayley expects @FILE or [row;row;...]", acol);
      }
      return GroupTable::validate(parse_table_rows(rows, acol), gens, std::nullopt, p, kFileGroupCaps);
    }
  } catch (const GroupError& e) {
    throw ParseError(e.what(), column);
  }
  throw ParseError("unknown group kind '" + kind + "'", column);
}

struct Line {
  std::size_t number = 0;
  std::size_t column = 0;  // 1-based column of the payload
  std::string payload;
};

}  // namespace

FieldPtr parse_field_spec(const std::string& text) {
  static const std::regex re(R"(GF\((\d+)(?:\^(\d+))?\)(?:/([0-9,]+))?)");
  std::smatch m;
  const std::string t = trim(text);
  if (!std::regex_match(t, m, re)) throw ParseError("expected a field like GF(2), GF(9) or GF(2^2), got '" + t + "'", 1);
  unsigned p = 0, s = 1;
  if (m[2].matched) {
    p = static_cast<unsigned>(std::stoul(m[1]));
    s = static_cast<unsigned>(std::stoul(m[2]));
    if (!is_prime(p)) throw ParseError("'" + m[1].str() + "' is not prime", 4);
  } else {
    const auto pp = prime_power(std::stoull(m[1]));
    if (!pp) throw ParseError("field size " + m[1].str() + " is not a prime power", 4);
    std::tie(p, s) = *pp;
  }
  std::optional<std::vector<unsigned>> modulus;
  if (m[3].matched) {
    modulus.emplace();
    std::istringstream is(m[3].str());
    for (std::string c; std::getline(is, c, ',');) {
      if (c.empty()) throw ParseError("empty modulus coefficient", static_cast<std::size_t>(m.position(3)) + 1);
      modulus->push_back(static_cast<unsigned>(std::stoul(c)));
    }
  }
  try {
    return FieldCtx::create(p, s, modulus);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

GroupPtr parse_group_spec(const std::string& text, unsigned p, const std::string& base_dir) {
  return build_group(trim(text), p, base_dir, std::nullopt, 1);
}

std::string describe_group(const GroupTable& g) {
  const std::size_t order = g.order();
  if (order == 1) return "cyclic:1";
  const unsigned p = g.p();
  unsigned n = 0;
  for (std::size_t q = 1; q < order; q *= p) ++n;
  const GroupCaps caps{order};
  if (*group_cyclic(p, n, caps) == g) return "cyclic:" + std::to_string(p) + "^" + std::to_string(n);
  if (g.is_elementary_abelian() && *group_elemab(p, n, caps).first == g)
    return "elemab:" + std::to_string(p) + "^" + std::to_string(n);
  std::ostringstream os;
  os << "cayley:[";
  for (std::size_t a = 0; a < order; ++a) {
    if (a) os << ";";
    for (std::size_t b = 0; b < order; ++b) os << (b ? "," : "") << g.mul(a, b);
  }
  os << "]";
  return os.str();
}

GAlgebra parse_algebra_file(const std::string& text, const std::string& base_dir) {
  std::map<std::string, Line> single;
  std::vector<Line> actions;
  std::istringstream is(text);
  std::size_t number = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++number;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (trim(line).empty()) continue;
    const std::size_t kw_start = lead(line);
    std::size_t kw_end = kw_start;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    const std::string keyword = line.substr(kw_start, kw_end - kw_start);
    std::string rest = line.substr(kw_end);
    const std::size_t col = kw_end + lead(rest) + 1;
    Line l{number, col, trim(rest)};
    if (keyword == "action") {
      actions.push_back(std::move(l));
    } else if (keyword == "field" || keyword == "vars" || keyword == "order" || keyword == "group" ||
               keyword == "gens") {
      if (single.count(keyword)) throw ParseError("duplicate '" + keyword + "' line", kw_start + 1, number);
      single[keyword] = std::move(l);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", kw_start + 1, number);
    }
  }
  for (const char* required : {"field", "vars", "group"})
    if (!single.count(required))
      throw ParseError(std::string("missing '") + required + "' line", 1, number + 1);

  auto relocate = [](const ParseError& e, const Line& l, std::size_t offset = 0) {
    return ParseError(e.what(), l.column + offset + (e.column() ? e.column() - 1 : 0), l.number);
  };

  const Line& fl = single["field"];
  FieldPtr k;
  try {
    k = parse_field_spec(fl.payload);
  } catch (const ParseError& e) {
    throw relocate(e, fl);
  }

  const Line& vl = single["vars"];
  std::vector<std::string> vars;
  {
    std::string v = vl.payload;
    for (auto& c : v)
      if (c == ',') c = ' ';
    std::istringstream vs(v);
    for (std::string name; vs >> name;) {
      if (!Ring::valid_name(name))
        throw ParseError("invalid variable name '" + name + "'", vl.column + vl.payload.find(name), vl.number);
      if (std::find(vars.begin(), vars.end(), name) != vars.end())
        throw ParseError("duplicate variable '" + name + "'", vl.column + vl.payload.find(name), vl.number);
      vars.push_back(name);
    }
    if (vars.empty()) throw ParseError("no variables", vl.column, vl.number);
  }

  MonomialOrder order = MonomialOrder::grevlex;
  if (single.count("order")) {
    const Line& ol = single["order"];
    const auto o = parse_order(ol.payload);
    if (!o) throw ParseError("unknown monomial order '" + ol.payload + "'", ol.column, ol.number);
    order = *o;
  }
  const RingPtr ring = Ring::create(k, vars, order);

  std::optional<std::vector<std::size_t>> gens;
  if (single.count("gens")) {
    const Line& gl = single["gens"];
    gens.emplace();
    std::string g = gl.payload;
    for (auto& c : g)
      if (c == ',') c = ' ';
    std::istringstream gs(g);
    for (std::string tok; gs >> tok;) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad generator index '" + tok + "'", gl.column + gl.payload.find(tok), gl.number);
      gens->push_back(std::stoul(tok));
    }
  }
  const Line& grl = single["group"];
  GroupPtr group;
  try {
    group = build_group(grl.payload, k->p(), base_dir, gens, 1);
  } catch (const ParseError& e) {
    throw relocate(e, grl);
  }

  std::vector<std::optional<VarMap>> maps(group->gens().size());
  for (const auto& al : actions) {
    const auto colon = al.payload.find(':');
    if (colon == std::string::npos) throw ParseError("action line needs 'gK:'", al.column, al.number);
    const std::string gname = trim(al.payload.substr(0, colon));
    static const std::regex gre(R"(g(\d+))");
    std::smatch gm;
    if (!std::regex_match(gname, gm, gre)) throw ParseError("expected a generator name like g1, got '" + gname + "'", al.column, al.number);
    const std::size_t gi = std::stoul(gm[1]);
    if (gi == 0 || gi > maps.size())
      throw ParseError("the group has " + std::to_string(maps.size()) + " generator(s); no " + gname, al.column,
                       al.number);
    if (maps[gi - 1]) throw ParseError("second action line for " + gname, al.column, al.number);
    VarMap m = VarMap::identity(ring);
    std::vector<bool> seen(vars.size(), false);
    std::size_t pos = colon + 1;
    while (pos <= al.payload.size()) {
      std::size_t semi = al.payload.find(';', pos);
      if (semi == std::string::npos) semi = al.payload.size();
      const std::string clause = al.payload.substr(pos, semi - pos);
      const std::size_t ccol = al.column + pos;  // column of clause start
      if (!trim(clause).empty()) {
        const auto arrow = clause.find("->");
        if (arrow == std::string::npos) throw ParseError("expected 'var -> polynomial'", ccol, al.number);
        const std::string vname = trim(clause.substr(0, arrow));
        const auto vi = ring->index_of(vname);
        if (!vi) throw ParseError("unknown variable '" + vname + "'", ccol + lead(clause), al.number);
        if (seen[*vi]) throw ParseError("variable '" + vname + "' assigned twice", ccol + lead(clause), al.number);
        seen[*vi] = true;
        const std::string body = clause.substr(arrow + 2);
        try {
          m.images[*vi] = parse_polynomial(ring, body);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), ccol + arrow + 2 + (e.column() ? e.column() - 1 : 0), al.number);
        }
      }
      pos = semi + 1;
    }
    maps[gi - 1] = std::move(m);
  }
  std::vector<VarMap> gen_maps;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!maps[i]) throw ParseError("missing action line for g" + std::to_string(i + 1), 1, number + 1);
    gen_maps.push_back(std::move(*maps[i]));
  }
  return GAlgebra::make(ring, group, std::move(gen_maps));
}

std::string emit_algebra(const GAlgebra& a) {
  std::ostringstream os;
  const RingPtr& ring = a.ring();
  os << "field " << a.field()->spec() << "\n";
  os << "vars";
  for (const auto& v : ring->vars()) os << " " << v;
  os << "\n";
  os << "order " << to_string(ring->order()) << "\n";
  const std::string gspec = describe_group(*a.group());
  os << "group " << gspec << "\n";
  if (gspec.rfind("cayley:", 0) == 0) {
    os << "gens";
    for (auto g : a.group()->gens()) os << " " << g;
    os << "\n";
  }
  for (std::size_t k = 0; k < a.generator_maps().size(); ++k) {
    os << "action g" << k + 1 << ":";
    bool first = true;
    const VarMap& m = a.generator_maps()[k];
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      if (m.images[v] == Polynomial::variable(ring, v)) continue;
      os << (first ? " " : " ; ") << ring->vars()[v] << " -> " << m.images[v].to_string();
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace modinv
