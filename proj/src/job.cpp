#include "eds/job.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace eds {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const FieldSpec& f, int line, int column0)
      : s_(s), f_(f), line_(line), col0_(column0) {}

  RationalFunction parse() {
    skip();
    if (pos_ >= s_.size()) fail(pos_, "empty expression");
    RationalFunction r = expr();
    skip();
    if (pos_ < s_.size()) fail(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(at), msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  // operand after an operator at position `op`
  void need_operand(std::size_t op) {
    skip();
    if (pos_ >= s_.size()) fail(op, std::string("dangling operator '") + s_[op] + "'");
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (peek('+') || peek('-')) {
      std::size_t op = pos_++;
      need_operand(op);
      RationalFunction rhs = term();
      acc = s_[op] == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (peek('*') || peek('/')) {
      std::size_t op = pos_++;
      need_operand(op);
      RationalFunction rhs = unary();
      if (s_[op] == '/') {
        if (rhs.is_zero()) fail(op, "division by zero");
        acc = acc / rhs;
      } else {
        acc = acc * rhs;
      }
    }
    return acc;
  }

  RationalFunction unary() {
    if (peek('-') || peek('+')) {
      std::size_t op = pos_++;
      need_operand(op);
      RationalFunction r = unary();
      return s_[op] == '-' ? -r : r;
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek('^')) {
      std::size_t op = pos_++;
      need_operand(op);
      bool neg = false;
      if (s_[pos_] == '-') {
        neg = true;
        ++pos_;
        need_operand(op);
      }
      if (!std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail(pos_, "exponent must be an integer literal");
      long long e = integer();
      if (neg && base.is_zero()) fail(op, "zero to a negative power");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  long long integer() {
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100'000'000'000LL) fail(start, "integer literal too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail(pos_, "expected an operand");
    char c = s_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      need_operand(open);
      RationalFunction r = expr();
      if (!peek(')')) {
        if (pos_ >= s_.size()) fail(open, "unclosed '('");
        fail(pos_, "expected ')'");
      }
      ++pos_;
      return r;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction::variable(f_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = integer();
      return RationalFunction(Polynomial::constant(f_.from_int(v)));
    }
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const FieldSpec& f_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

struct RawItem {
  std::string value;
  int line;
  int column;  // 1-based column of the value's first character
  int key_column;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* kCoeffKeys[5] = {"a1", "a2", "a3", "a4", "a6"};

}  // namespace

RationalFunction parse_expression(const std::string& text, const FieldSpec& f, int line, int column0) {
  return ExprParser(text, f, line, column0).parse();
}

RationalFunction JobSpec::coefficient(int i) const {
  return a[i] ? *a[i] : RationalFunction(field());
}

Curve JobSpec::curve() const {
  return Curve(coefficient(0), coefficient(1), coefficient(2), coefficient(3), coefficient(4));
}

FfPoint JobSpec::point() const {
  if (!has_point()) throw DomainError("job has no point (x and y are required)");
  return FfPoint(*x, *y);
}

bool JobSpec::operator==(const JobSpec& o) const {
  if (command != o.command || p != o.p || N != o.N || show_local != o.show_local || show_primitive != o.show_primitive ||
      verify != o.verify)
    return false;
  for (int i = 0; i < 5; ++i)
    if (!(coefficient(i) == o.coefficient(i))) return false;
  return x == o.x && y == o.y;
}

JobSpec parse_job(const std::string& text) {
  std::map<std::string, RawItem> items;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::size_t start = 0;
    while (start <= raw.size()) {
      std::size_t comma = raw.find(',', start);
      std::size_t end = comma == std::string::npos ? raw.size() : comma;
      std::string item = raw.substr(start, end - start);
      if (!trim(item).empty()) {
        std::size_t eq = item.find('=');
        std::size_t key_at = item.find_first_not_of(" \t\r");
        int key_col = static_cast<int>(start + key_at) + 1;
        if (eq == std::string::npos) throw ParseError(line, key_col, "expected 'key = value'");
        std::string key = trim(item.substr(0, eq));
        if (key.empty()) throw ParseError(line, key_col, "missing key");
        static const std::set<std::string> known{"p", "a1", "a2", "a3", "a4", "a6", "x", "y", "N"};
        if (!known.count(key)) throw ParseError(line, key_col, "unknown key '" + key + "'");
        if (items.count(key)) throw ParseError(line, key_col, "duplicate key '" + key + "'");
        std::string value = item.substr(eq + 1);
        std::size_t vb = value.find_first_not_of(" \t\r");
        int vcol = static_cast<int>(start + eq + 1 + (vb == std::string::npos ? value.size() : vb)) + 1;
        if (vb == std::string::npos) throw ParseError(line, vcol, "missing value for '" + key + "'");
        std::string v = value.substr(vb);
        v = v.substr(0, v.find_last_not_of(" \t\r") + 1);
        items.emplace(key, RawItem{v, line, vcol, key_col});
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }

  JobSpec job;
  auto it = items.find("p");
  if (it == items.end()) throw ParseError(1, 1, "missing key 'p'");
  {
    const RawItem& r = it->second;
    for (std::size_t i = 0; i < r.value.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(r.value[i])))
        throw ParseError(r.line, r.column + static_cast<int>(i), "p must be a positive integer");
    if (r.value.size() > 6) throw ParseError(r.line, r.column, "p is too large");
    long long p = std::stoll(r.value);
    if (p < 2 || p > kMaxCharacteristic || !is_prime_number(static_cast<std::uint64_t>(p)))
      throw ParseError(r.line, r.column, "p = " + r.value + " is not a supported prime");
    job.p = static_cast<std::uint32_t>(p);
  }
  if (auto n = items.find("N"); n != items.end()) {
    const RawItem& r = n->second;
    for (std::size_t i = 0; i < r.value.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(r.value[i])))
        throw ParseError(r.line, r.column + static_cast<int>(i), "N must be a positive integer");
    if (r.value.size() > 6 || std::stoll(r.value) < 1) throw ParseError(r.line, r.column, "N out of range");
    job.N = static_cast<int>(std::stoll(r.value));
  }
  const FieldSpec& f = job.field();
  for (int i = 0; i < 5; ++i)
    if (auto c = items.find(kCoeffKeys[i]); c != items.end())
      job.a[i] = parse_expression(c->second.value, f, c->second.line, c->second.column);
  if (auto c = items.find("x"); c != items.end()) job.x = parse_expression(c->second.value, f, c->second.line, c->second.column);
  if (auto c = items.find("y"); c != items.end()) job.y = parse_expression(c->second.value, f, c->second.line, c->second.column);
  if (job.x.has_value() != job.y.has_value()) {
    const RawItem& r = items.count("x") ? items.at("x") : items.at("y");
    throw ParseError(r.line, r.key_column, "a point needs both x and y");
  }

  Curve E = job.curve();  // throws DomainError on a singular model
  if (job.has_point() && !E.contains(job.point()))
    throw DomainError("point " + job.point().to_string() + " is not on " + E.to_string());
  return job;
}

std::string render_job(const JobSpec& job) {
  std::string out = "p = " + std::to_string(job.p) + "\n";
  for (int i = 0; i < 5; ++i) out += std::string(kCoeffKeys[i]) + " = " + job.coefficient(i).to_string() + "\n";
  if (job.has_point()) {
    out += "x = " + job.x->to_string() + "\n";
    out += "y = " + job.y->to_string() + "\n";
  }
  out += "N = " + std::to_string(job.N) + "\n";
  return out;
}

namespace {

std::string join_places(const std::vector<Place>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : ", ") + v.to_string();
  return s;
}

CommandResult run_unchecked(const JobSpec& job, const RunOptions& opt) {
  std::ostringstream out;
  if (job.command == "verify") {
    SweepReport rep = consistency_sweep(catalog_generators(), opt.schedule, opt.seed);
    for (const auto& l : rep.render()) out << l << "\n";
    std::string err;
    for (const auto& f : rep.failures) err += "violation: " + f + "\n";
    return {rep.ok() ? 0 : 1, out.str(), err};
  }
  if (job.command == "local") {
    for (const auto& ld : local_data_report(job.curve())) {
      out << ld.place.to_string() << ": " << ld.kodaira.to_string() << "  c=" << ld.tamagawa
          << " vDelta=" << ld.disc_valuation;
      if (job.has_point()) out << " d=" << component_order(ld, job.point()).d;
      out << "\n";
    }
    return {0, out.str(), ""};
  }
  if (job.command == "constant") {
    std::array<FieldElement, 5> c;
    for (int i = 0; i < 5; ++i) {
      RationalFunction a = job.coefficient(i);
      if (!a.is_constant()) return {2, "", "constant mode needs constant coefficients; a" + std::string(kCoeffKeys[i] + 1) + " = " + a.to_string() + "\n"};
      c[i] = a.is_zero() ? job.field().zero() : a.constant_value();
    }
    ConstCurve E(c[0], c[1], c[2], c[3], c[4]);
    const bool ss = is_supersingular(E);
    out << (ss ? "supersingular" : "ordinary") << " curve " << E.to_string() << "\n";
    for (int n = 1; n <= job.N; ++n) out << constant_eds_profile(E, n, opt.seed).to_string() << "\n";
    bool ok = true;
    if (ss) {
      for (int n = static_cast<int>(job.p); n <= job.N; n += static_cast<int>(job.p)) {
        bool holds = theorem_c_check(E, job.p, n, opt.seed);
        ok = ok && holds;
        out << "D_" << n << " = " << job.p * job.p << " * D_" << n / static_cast<int>(job.p) << ": "
            << (holds ? "holds" : "FAILS") << "\n";
      }
    }
    return {ok ? 0 : 1, out.str(), ok ? "" : "constant profile relation failed\n"};
  }
  if (job.command == "table" || job.command == "zsigmondy") {
    if (!job.has_point()) return {2, "", "command '" + job.command + "' needs a point (keys x and y)\n"};
    auto outcome = eds_sequence(job.curve(), job.point(), job.N, opt.schedule, opt.seed);
    if (auto* hit = std::get_if<TorsionHit>(&outcome))
      return {2, "", "point is torsion of order " + std::to_string(hit->order) + "; D_" + std::to_string(hit->order) +
                         " is undefined\n"};
    const EdsSequence& seq = std::get<EdsSequence>(outcome);
    if (job.command == "table") {
      for (const auto& l : render_table(seq)) out << l << "\n";
    } else {
      auto rep = zsigmondy_report(seq);
      for (const auto& row : rep.rows)
        out << "n=" << row.n << " " << (row.has_primitive ? "primitive: " + join_places(row.witnesses) : "none") << "\n";
      out << "largest n <= " << job.N << " without a primitive place: "
          << (rep.largest_lacking ? std::to_string(*rep.largest_lacking) : "none") << "\n";
    }
    return {0, out.str(), ""};
  }
  return {2, "", "unknown command '" + job.command + "' (expected table, local, zsigmondy, verify, constant)\n"};
}

}  // namespace

CommandResult run_command(const JobSpec& job, const RunOptions& options) {
  try {
    return run_unchecked(job, options);
  } catch (const ConsistencyError& e) {
    return {1, "", std::string("assertion violated: ") + e.what() + "\n"};
  } catch (const TorsionHitError& e) {
    return {2, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, "", std::string("input error: ") + e.what() + "\n"};
  }
}

}  // namespace eds
