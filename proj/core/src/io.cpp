#include "hcs/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hcs {

namespace {

// --- emission ----------------------------------------------------------------

bool scalar_negative(const Scalar& c) {
  return c.field().kind() == FieldKind::Rationals && c.rational() < 0;
}

std::string magnitude_str(const Scalar& c) {
  if (scalar_negative(c)) return (-c).str();
  return c.str();
}

void emit_terms(std::ostringstream& os, const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto& [basis, c] : terms) {
    std::string mag = magnitude_str(c);
    if (first) {
      if (scalar_negative(c)) os << "-";
      first = false;
    } else {
      os << (scalar_negative(c) ? " - " : " + ");
    }
    if (mag != "1") os << mag << " ";
    os << basis;
  }
}

void emit_map_block(std::ostringstream& os, const std::string& name, const TensorMap& m) {
  const std::string& dn = m.dom().name;
  if (m.arity() == 1) {
    os << "map " << name << " " << dn << " {\n";
    for (int i = 0; i < m.dom().dim; ++i) {
      std::vector<std::pair<std::string, Scalar>> terms;
      for (int j = 0; j < m.cod()[0].dim; ++j)
        if (!m.at1(i, j).is_zero()) terms.emplace_back("e" + std::to_string(j + 1), m.at1(i, j));
      os << "  e" << (i + 1) << " -> ";
      emit_terms(os, terms);
      os << "\n";
    }
    os << "}\n";
  } else {
    os << "comap " << name << " " << dn << " -> (" << m.cod()[0].name << "," << m.cod()[1].name
       << ") {\n";
    for (int i = 0; i < m.dom().dim; ++i) {
      std::vector<std::pair<std::string, Scalar>> terms;
      for (int a = 0; a < m.cod()[0].dim; ++a)
        for (int b = 0; b < m.cod()[1].dim; ++b)
          if (!m.at2(i, a, b).is_zero())
            terms.emplace_back("(e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1) + ")",
                               m.at2(i, a, b));
      os << "  e" << (i + 1) << " -> ";
      emit_terms(os, terms);
      os << "\n";
    }
    os << "}\n";
  }
}

void emit_product_block(std::ostringstream& os, const std::string& name, const ProductTensor& m) {
  os << "product " << name << " " << m.space.name << " {\n";
  for (int i = 0; i < m.space.dim; ++i)
    for (int j = 0; j < m.space.dim; ++j) {
      std::vector<std::pair<std::string, Scalar>> terms;
      for (int k = 0; k < m.space.dim; ++k)
        if (!m.at(i, j, k).is_zero()) terms.emplace_back("e" + std::to_string(k + 1), m.at(i, j, k));
      os << "  (e" << (i + 1) << ",e" << (j + 1) << ") -> ";
      emit_terms(os, terms);
      os << "\n";
    }
  os << "}\n";
}

std::string field_header(const FieldSpec& f) {
  if (f.kind() == FieldKind::Rationals) return "field = Q";
  return "field = Fp " + std::to_string(f.p());
}

// --- parsing -----------------------------------------------------------------

struct Lines {
  std::vector<std::pair<int, std::string>> rows;  // (line number, stripped content)
  std::size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
      ++no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
      std::size_t b = 0;
      while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
      line = line.substr(b);
      if (!line.empty()) rows.emplace_back(no, line);
    }
  }
  bool done() const { return pos >= rows.size(); }
  const std::string& peek() const { return rows[pos].second; }
  int line() const { return pos < rows.size() ? rows[pos].first : -1; }
  std::string next() { return rows[pos++].second; }
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_basis_index(const std::string& tok, int line) {
  if (tok.size() < 2 || tok[0] != 'e') fail(line, "expected basis vector, got '" + tok + "'");
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) fail(line, "bad basis vector '" + tok + "'");
  int v = std::stoi(tok.substr(1));
  if (v < 1) fail(line, "basis indices start at e1");
  return v - 1;
}

struct Term {
  Scalar c;
  std::vector<int> legs;  // 1 or 2 entries
};

// rhs := 0 | term ((+|-) term)* ; term := [scalar] (eJ | (eJ,eK))
std::vector<Term> parse_terms(const std::string& rhs, const FieldSpec& f, int line) {
  std::string norm;
  norm.reserve(rhs.size());
  bool in_paren = false;
  for (char ch : rhs) {
    if (ch == '(') in_paren = true;
    if (ch == ')') in_paren = false;
    if (in_paren && std::isspace(static_cast<unsigned char>(ch))) continue;
    norm.push_back(ch);
  }
  auto toks = split_ws(norm);
  if (toks.size() == 1 && toks[0] == "0") return {};

  std::vector<Term> out;
  bool negate = false;
  std::optional<Scalar> pending;
  auto flush_basis = [&](const std::string& tok) {
    Term t;
    t.c = pending ? *pending : Scalar::one(f);
    if (negate) t.c = -t.c;
    if (tok[0] == '(') {
      if (tok.back() != ')') fail(line, "unbalanced parenthesis in '" + tok + "'");
      std::string inner = tok.substr(1, tok.size() - 2);
      auto comma = inner.find(',');
      if (comma == std::string::npos) fail(line, "expected (eJ,eK) in '" + tok + "'");
      t.legs.push_back(parse_basis_index(inner.substr(0, comma), line));
      t.legs.push_back(parse_basis_index(inner.substr(comma + 1), line));
    } else {
      t.legs.push_back(parse_basis_index(tok, line));
    }
    out.push_back(std::move(t));
    pending.reset();
    negate = false;
  };

  for (const auto& tok : toks) {
    if (tok == "+") {
      if (pending) fail(line, "dangling coefficient");
      continue;
    }
    if (tok == "-") {
      if (pending) fail(line, "dangling coefficient");
      negate = !negate;
      continue;
    }
    if (tok[0] == 'e' || tok[0] == '(') {
      flush_basis(tok);
    } else {
      if (pending) fail(line, "two coefficients in a row at '" + tok + "'");
      pending = Scalar::parse(f, tok);
    }
  }
  if (pending || negate) fail(line, "trailing coefficient with no basis vector");
  return out;
}

struct RawBlock {
  std::string head;  // "map" | "comap" | "product"
  std::string name;
  std::string space;
  std::string cod1, cod2;                                   // comap only
  std::vector<std::pair<int, std::string>> rows;            // (line, content)
  int line = 0;
};

}  // namespace

std::string emit_structure_file(const StructurePackage& s) {
  s.validate();
  std::ostringstream os;
  os << "kind = " << kind_name(s.kind) << "\n";
  os << field_header(s.field) << "\n";
  os << "dim " << s.space.name << " = " << s.space.dim << "\n";
  if (s.rb) os << "rb weight = " << s.rb->weight.str() << "\n";
  emit_map_block(os, "alpha", s.alpha);
  if (s.rb) emit_map_block(os, "rb", s.rb->op);
  for (const auto& n : comap_names(s.kind)) emit_map_block(os, n, s.comap(n));
  return os.str();
}

std::string emit_structure_file(const ComodulePackage& cm) {
  cm.validate();
  std::ostringstream os;
  os << "kind = " << comodule_kind_name(cm.kind) << "\n";
  os << field_header(cm.base.field) << "\n";
  os << "dim " << cm.base.space.name << " = " << cm.base.space.dim << "\n";
  os << "dim " << cm.mspace.name << " = " << cm.mspace.dim << "\n";
  if (cm.base.rb) os << "rb weight = " << cm.base.rb->weight.str() << "\n";
  emit_map_block(os, "alpha", cm.base.alpha);
  emit_map_block(os, "alpha_m", cm.alpha_m);
  if (cm.base.rb) emit_map_block(os, "rb", cm.base.rb->op);
  for (const auto& n : comap_names(cm.base.kind)) emit_map_block(os, n, cm.base.comap(n));
  for (const auto& n : comodule_map_names(cm.kind)) emit_map_block(os, n, cm.map(n));
  return os.str();
}

std::string emit_structure_file(const AlgebraConstants& a) {
  std::ostringstream os;
  os << "kind = TridendAlgebra\n";
  os << field_header(a.field) << "\n";
  os << "dim " << a.space.name << " = " << a.space.dim << "\n";
  emit_map_block(os, "alpha", a.alpha);
  emit_product_block(os, "m_left", a.m_left);
  emit_product_block(os, "m_dot", a.m_dot);
  emit_product_block(os, "m_right", a.m_right);
  return os.str();
}

std::string emit_parsed(const ParsedFile& v) {
  return std::visit([](const auto& x) { return emit_structure_file(x); }, v);
}

ParsedFile parse_structure_file(const std::string& text) {
  Lines in(text);

  std::string kind_str;
  std::optional<FieldSpec> field;
  std::vector<SpaceId> spaces;
  std::optional<std::string> weight_str;
  std::vector<RawBlock> blocks;

  // header lines
  while (!in.done()) {
    const std::string& l = in.peek();
    if (l.rfind("map ", 0) == 0 || l.rfind("comap ", 0) == 0 || l.rfind("product ", 0) == 0) break;
    int line = in.line();
    auto toks = split_ws(in.next());
    if (toks.size() == 3 && toks[0] == "kind" && toks[1] == "=") {
      kind_str = toks[2];
    } else if (toks.size() >= 3 && toks[0] == "field" && toks[1] == "=") {
      if (toks[2] == "Q" && toks.size() == 3) {
        field = FieldSpec::rationals();
      } else if (toks[2] == "Fp" && toks.size() == 4) {
        long long p = -1;
        try {
          p = std::stoll(toks[3]);
        } catch (...) {
          fail(line, "bad modulus '" + toks[3] + "'");
        }
        if (p < 2 || p > (1ll << 31)) throw Error(Errc::NonPrimeModulus, "modulus out of range");
        field = FieldSpec::prime(static_cast<std::uint32_t>(p));
      } else {
        fail(line, "field must be 'Q' or 'Fp <p>'");
      }
    } else if (toks.size() == 4 && toks[0] == "dim" && toks[2] == "=") {
      int d = 0;
      try {
        d = std::stoi(toks[3]);
      } catch (...) {
        fail(line, "bad dimension '" + toks[3] + "'");
      }
      if (d < 1) throw Error(Errc::DimMismatch, "line " + std::to_string(line) + ": dim must be >= 1");
      spaces.push_back(SpaceId{toks[1], d});
    } else if (toks.size() == 4 && toks[0] == "rb" && toks[1] == "weight" && toks[2] == "=") {
      weight_str = toks[3];
    } else {
      fail(line, "unknown header line '" + l + "'");
    }
  }

  if (kind_str.empty()) throw Error(Errc::UnknownKind, "missing kind");
  if (!field) throw Error(Errc::SyntaxError, "missing field");
  if (spaces.empty()) throw Error(Errc::DimMismatch, "missing dim line");

  auto find_space = [&](const std::string& name, int line) -> SpaceId {
    for (const auto& s : spaces)
      if (s.name == name) return s;
    fail(line, "unknown space '" + name + "'");
  };

  // blocks
  while (!in.done()) {
    int line = in.line();
    std::string head_line = in.next();
    if (head_line.back() != '{') fail(line, "expected '{' at end of block header");
    auto toks = split_ws(head_line.substr(0, head_line.size() - 1));
    RawBlock b;
    b.line = line;
    if (toks.size() == 3 && (toks[0] == "map" || toks[0] == "product")) {
      b.head = toks[0];
      b.name = toks[1];
      b.space = toks[2];
    } else if (toks.size() == 5 && toks[0] == "comap" && toks[3] == "->") {
      b.head = "comap";
      b.name = toks[1];
      b.space = toks[2];
      std::string pair = toks[4];
      if (pair.size() < 5 || pair.front() != '(' || pair.back() != ')')
        fail(line, "expected (S1,S2) codomain");
      auto comma = pair.find(',');
      if (comma == std::string::npos) fail(line, "expected (S1,S2) codomain");
      b.cod1 = pair.substr(1, comma - 1);
      b.cod2 = pair.substr(comma + 1, pair.size() - comma - 2);
    } else {
      fail(line, "unknown block header '" + head_line + "'");
    }
    while (true) {
      if (in.done()) fail(line, "unterminated block '" + b.name + "'");
      int rl = in.line();
      std::string row = in.next();
      if (row == "}") break;
      b.rows.emplace_back(rl, row);
    }
    blocks.push_back(std::move(b));
  }

  const FieldSpec& f = *field;

  auto build_map = [&](const RawBlock& b) -> TensorMap {
    SpaceId dom = find_space(b.space, b.line);
    std::vector<SpaceId> cod;
    if (b.head == "map")
      cod = {dom};
    else
      cod = {find_space(b.cod1, b.line), find_space(b.cod2, b.line)};
    TensorMap m(f, dom, cod);
    std::vector<bool> seen(dom.dim, false);
    for (const auto& [rl, row] : b.rows) {
      auto arrow = row.find("->");
      if (arrow == std::string::npos) fail(rl, "expected '->' in row");
      auto lhs = split_ws(row.substr(0, arrow));
      if (lhs.size() != 1) fail(rl, "row must start with one basis vector");
      int i = parse_basis_index(lhs[0], rl);
      if (i >= dom.dim) throw Error(Errc::DimMismatch, "line " + std::to_string(rl) + ": e" +
                                                           std::to_string(i + 1) + " exceeds dim");
      if (seen[i]) fail(rl, "duplicate row for e" + std::to_string(i + 1));
      seen[i] = true;
      for (const auto& t : parse_terms(row.substr(arrow + 2), f, rl)) {
        if (static_cast<int>(t.legs.size()) != m.arity()) fail(rl, "term arity does not match block");
        for (int leg = 0; leg < m.arity(); ++leg)
          if (t.legs[leg] >= m.cod()[leg].dim)
            throw Error(Errc::DimMismatch, "line " + std::to_string(rl) + ": basis index exceeds dim");
        m.set(i, t.legs, m.at(i, t.legs) + t.c);
      }
    }
    return m;
  };

  auto build_product = [&](const RawBlock& b) -> ProductTensor {
    SpaceId sp = find_space(b.space, b.line);
    ProductTensor m(f, sp);
    for (const auto& [rl, row] : b.rows) {
      auto arrow = row.find("->");
      if (arrow == std::string::npos) fail(rl, "expected '->' in row");
      std::string lhs = row.substr(0, arrow);
      lhs.erase(std::remove_if(lhs.begin(), lhs.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                lhs.end());
      if (lhs.size() < 7 || lhs.front() != '(' || lhs.back() != ')') fail(rl, "expected (eI,eJ) row");
      auto comma = lhs.find(',');
      int i = parse_basis_index(lhs.substr(1, comma - 1), rl);
      int j = parse_basis_index(lhs.substr(comma + 1, lhs.size() - comma - 2), rl);
      if (i >= sp.dim || j >= sp.dim)
        throw Error(Errc::DimMismatch, "line " + std::to_string(rl) + ": basis index exceeds dim");
      for (const auto& t : parse_terms(row.substr(arrow + 2), f, rl)) {
        if (t.legs.size() != 1) fail(rl, "product rows take single basis targets");
        if (t.legs[0] >= sp.dim)
          throw Error(Errc::DimMismatch, "line " + std::to_string(rl) + ": basis index exceeds dim");
        m.set(i, j, t.legs[0], m.at(i, j, t.legs[0]) + t.c);
      }
    }
    return m;
  };

  std::map<std::string, TensorMap> named_maps;
  std::map<std::string, ProductTensor> named_products;
  for (const auto& b : blocks) {
    if (b.head == "product") {
      if (!named_products.emplace(b.name, build_product(b)).second)
        fail(b.line, "duplicate block '" + b.name + "'");
    } else {
      if (!named_maps.emplace(b.name, build_map(b)).second)
        fail(b.line, "duplicate block '" + b.name + "'");
    }
  }

  auto take_map = [&](const std::string& name) -> TensorMap {
    auto it = named_maps.find(name);
    if (it == named_maps.end()) throw Error(Errc::SyntaxError, "missing block '" + name + "'");
    TensorMap m = std::move(it->second);
    named_maps.erase(it);
    return m;
  };

  auto parse_weight = [&]() -> Scalar {
    if (!weight_str) throw Error(Errc::SyntaxError, "missing 'rb weight =' line");
    return Scalar::parse(f, *weight_str);
  };

  if (kind_str == "TridendAlgebra") {
    if (spaces.size() != 1) throw Error(Errc::DimMismatch, "algebra files use one space");
    auto take_product = [&](const std::string& name) -> ProductTensor {
      auto it = named_products.find(name);
      if (it == named_products.end()) throw Error(Errc::SyntaxError, "missing block '" + name + "'");
      ProductTensor p = std::move(it->second);
      named_products.erase(it);
      return p;
    };
    AlgebraConstants a{f, spaces[0], take_map("alpha"), take_product("m_left"),
                       take_product("m_dot"), take_product("m_right")};
    if (!named_maps.empty()) throw Error(Errc::SyntaxError, "unknown block '" + named_maps.begin()->first + "'");
    if (!named_products.empty())
      throw Error(Errc::SyntaxError, "unknown block '" + named_products.begin()->first + "'");
    return a;
  }

  if (!named_products.empty())
    throw Error(Errc::SyntaxError, "product blocks only appear in TridendAlgebra files");

  if (auto ck = comodule_kind_from_name(kind_str)) {
    if (spaces.size() != 2) throw Error(Errc::DimMismatch, "comodule files use exactly two spaces");
    StructureKind bk = comodule_base_kind(*ck);
    SpaceId lspace = spaces[0], mspace = spaces[1];
    StructurePackage base{bk, lspace, f, take_map("alpha"), {}, std::nullopt};
    for (const auto& n : comap_names(bk)) base.comaps.emplace(n, take_map(n));
    if (kind_has_rb(bk)) base.rb = RotaBaxter{take_map("rb"), parse_weight()};
    ComodulePackage cm{*ck, std::move(base), mspace, take_map("alpha_m"), {}};
    for (const auto& n : comodule_map_names(*ck)) cm.maps.emplace(n, take_map(n));
    if (!named_maps.empty())
      throw Error(Errc::SyntaxError, "unknown block '" + named_maps.begin()->first + "'");
    cm.validate();
    return cm;
  }

  auto sk = kind_from_name(kind_str);
  if (!sk) throw Error(Errc::UnknownKind, "unknown kind '" + kind_str + "'");
  if (spaces.size() != 1) throw Error(Errc::DimMismatch, "structure files use one space");
  StructurePackage s{*sk, spaces[0], f, take_map("alpha"), {}, std::nullopt};
  for (const auto& n : comap_names(*sk)) s.comaps.emplace(n, take_map(n));
  if (kind_has_rb(*sk)) s.rb = RotaBaxter{take_map("rb"), parse_weight()};
  if (!named_maps.empty())
    throw Error(Errc::SyntaxError, "unknown block '" + named_maps.begin()->first + "'");
  s.validate();
  return s;
}

std::string emit_report(const CheckReport& rep) {
  std::ostringstream os;
  os << "hcs-report check\n";
  os << "kind = " << rep.kind_label << "\n";
  for (const auto& n : rep.notes) os << "note = " << n << "\n";
  for (const auto& e : rep.entries) {
    os << "axiom " << e.axiom_id << " " << (e.passed ? "pass" : "FAIL");
    if (!e.passed) {
      os << " first_failing_basis_index = " << *e.first_failing_basis_index;
      // first few nonzero residual coordinates
      int shown = 0;
      const TensorMap& r = e.residual;
      std::vector<int> js(r.arity(), 0);
      os << " support =";
      for (int i = 0; i < r.dom().dim && shown < 4; ++i) {
        std::fill(js.begin(), js.end(), 0);
        while (shown < 4) {
          const Scalar& v = r.at(i, js);
          if (!v.is_zero()) {
            os << " (e" << (i + 1);
            for (std::size_t t = 0; t < js.size(); ++t) os << (t == 0 ? "; e" : ",e") << (js[t] + 1);
            os << ")=" << v.str();
            ++shown;
          }
          int t = r.arity() - 1;
          while (t >= 0 && ++js[t] == r.cod()[t].dim) js[t--] = 0;
          if (t < 0) break;
        }
      }
    }
    if (e.multiplicativity) os << " [multiplicativity]";
    os << "\n";
  }
  os << "structural = " << (rep.structural_pass ? "pass" : "fail") << "\n";
  os << "multiplicative = " << (rep.multiplicative ? "pass" : "fail") << "\n";
  os << "passed = " << (rep.passed ? "pass" : "fail") << "\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::SyntaxError, "cannot write " + path);
  out << content;
}

}  // namespace hcs
