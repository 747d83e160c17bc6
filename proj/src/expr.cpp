#include "semicrossed/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "semicrossed/error.hpp"

namespace semicrossed {

namespace {

class Parser {
 public:
  Parser(const DynamicalSystem& sys, const std::string& text, Form form) : sys_(sys), text_(text), form_(form) {}

  Element element() {
    skip();
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') sign = text_[pos_++] == '-' ? -1.0 : 1.0;
    Element acc = scale(term(), sign);
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') return acc;
      sign = text_[pos_++] == '-' ? -1.0 : 1.0;
      acc = add(sys_, acc, scale(term(), sign));
    }
  }

  BaseFunction baseFunction() {
    skip();
    const std::string name = identifier();
    if (name == "cos" || name == "sin") {
      expect('(');
      const std::int64_t k = integer();
      expect(')');
      requireCircle(name);
      return name == "cos" ? cosine(k) : sine(k);
    }
    if (name == "trig") {
      requireCircle(name);
      std::map<std::int64_t, cplx> coeffs;
      list([&] {
        const std::int64_t k = integer();
        expect(':');
        coeffs[k] += scalar();
      });
      return trig(std::move(coeffs));
    }
    if (name == "cyl") {
      if (sys_.kind() != DynamicalSystem::Kind::Sft) fail("cyl() needs an SFT system");
      std::map<std::vector<int>, cplx> values;
      std::size_t depth = 0;
      list([&] {
        skip();
        std::vector<int> w;
        while (std::isalnum(static_cast<unsigned char>(peek()))) {
          const char c = text_[pos_++];
          w.push_back(std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : 10 + (std::tolower(c) - 'a'));
        }
        if (w.empty()) fail("expected a word");
        if (depth != 0 && w.size() != depth) fail("cylinder words must share one length");
        depth = w.size();
        expect(':');
        values[w] = scalar();
      });
      return cylinder(sys_, static_cast<int>(depth), std::move(values));
    }
    if (name == "tab") {
      if (sys_.kind() != DynamicalSystem::Kind::Permutation) fail("tab() needs a permutation system");
      Tabular t;
      list([&] { t.values.push_back(scalar()); });
      validateBase(sys_, t);
      return t;
    }
    fail("unknown function '" + name + "'");
  }

  ExtFunction extFunction() {
    skip();
    int depth = 1;
    if (peek() == '@') {
      ++pos_;
      depth = static_cast<int>(integer());
      if (depth < 1) fail("depth must be >= 1");
      expect(':');
    }
    return {depth, baseFunction()};
  }

  cplx scalar() {
    skip();
    if (peek() == '(') {
      ++pos_;
      const double re = real();
      expect(',');
      const double im = real();
      expect(')');
      return {re, im};
    }
    return real();
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }

 private:
  Element term() {
    Element acc = factor();
    for (;;) {
      skip();
      if (peek() != '*') return acc;
      ++pos_;
      acc = multiply(sys_, acc, factor());
    }
  }

  Element factor() {
    skip();
    const char c = peek();
    if (c == 'U' && !std::isalnum(static_cast<unsigned char>(at(pos_ + 1)))) {
      ++pos_;
      std::int64_t n = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        n = integer();
      }
      if (form_ == Form::Right && n < 0) fail("relation-2 elements have no negative powers");
      Element u = powerOfU(sys_, n);
      u.form = form_;
      return u;
    }
    if (c == '(') {
      const std::size_t save = pos_;
      try {
        const cplx v = scalar();
        return constantElement(v);
      } catch (const Error&) {
        pos_ = save + 1;
      }
      Element inner = element();
      expect(')');
      return inner;
    }
    if (c == '@' || std::isalpha(static_cast<unsigned char>(c))) {
      Element e = fromFunction(extFunction());
      e.form = form_;
      return e;
    }
    return constantElement(real());
  }

  Element constantElement(cplx v) {
    Element e = fromFunction(constant(sys_, v));
    e.form = form_;
    return e;
  }

  template <class F>
  void list(F item) {
    expect('(');
    skip();
    if (peek() == ')') fail("empty argument list");
    for (;;) {
      item();
      skip();
      if (peek() == ')') {
        ++pos_;
        return;
      }
      expect(',');
    }
  }

  double real() {
    skip();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double num = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    if (peek() == '/') {
      ++pos_;
      const char* b2 = text_.c_str() + pos_;
      const double den = std::strtod(b2, &end);
      if (end == b2 || den == 0.0) fail("bad rational denominator");
      pos_ += static_cast<std::size_t>(end - b2);
      num /= den;
    }
    return num;
  }

  std::int64_t integer() {
    skip();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  std::string identifier() {
    std::string out;
    while (std::isalpha(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    if (out.empty()) fail("expected a function name");
    return out;
  }

  void requireCircle(const std::string& name) {
    if (sys_.kind() != DynamicalSystem::Kind::CircleTimesK) fail(name + "() needs a circle system");
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return at(pos_); }
  char at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::Parse, what + " at column " + std::to_string(pos_ + 1) + " of '" + text_ + "'");
  }

  const DynamicalSystem& sys_;
  const std::string& text_;
  Form form_;
  std::size_t pos_ = 0;
};

}  // namespace

BaseFunction parseBaseFunction(const DynamicalSystem& sys, const std::string& text) {
  Parser p(sys, text, Form::Left);
  BaseFunction g = p.baseFunction();
  p.finish();
  return g;
}

ExtFunction parseExtFunction(const DynamicalSystem& sys, const std::string& text) {
  Parser p(sys, text, Form::Left);
  ExtFunction f = p.extFunction();
  p.finish();
  return f;
}

Element parseElement(const DynamicalSystem& sys, const std::string& text, Form form) {
  Parser p(sys, text, form);
  Element e = p.element();
  p.finish();
  return e;
}

cplx parseScalar(const std::string& text) {
  static const DynamicalSystem dummy = DynamicalSystem::circle(2);
  Parser p(dummy, text, Form::Left);
  const cplx v = p.scalar();
  p.finish();
  return v;
}

}  // namespace semicrossed
