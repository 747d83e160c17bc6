#include "semicrossed/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "semicrossed/error.hpp"
#include "semicrossed/expr.hpp"

namespace semicrossed {

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

struct Section {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

[[noreturn]] void fail(Errc code, int line, const std::string& field, const std::string& what) {
  std::string where = "line " + std::to_string(line);
  if (!field.empty()) where += ", field '" + field + "'";
  throw Error(code, where + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      text_ += line;
      text_ += '\n';
    }
  }

  std::vector<Section> sections() {
    std::vector<Section> out;
    for (;;) {
      skipSeparators();
      if (pos_ >= text_.size()) return out;
      Section s;
      s.line = line_;
      s.kind = identifier("section name");
      if (s.kind == "element") {
        skipBlanks();
        s.name = identifier("element name");
      }
      skipBlanks();
      if (peek() != '{') fail(Errc::Parse, line_, "", "expected '{' after '" + s.kind + "'");
      ++pos_;
      for (;;) {
        skipSeparators();
        if (pos_ >= text_.size()) fail(Errc::Parse, s.line, "", "section '" + s.kind + "' is not closed");
        if (peek() == '}') {
          ++pos_;
          break;
        }
        Entry e;
        e.line = line_;
        e.key = identifier("key");
        skipBlanks();
        if (peek() != '=') fail(Errc::Parse, line_, e.key, "expected '='");
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && peek() != ';' && peek() != '\n' && peek() != '}') ++pos_;
        e.value = trim(text_.substr(start, pos_ - start));
        if (e.value.empty()) fail(Errc::Parse, e.line, e.key, "missing value");
        s.entries.push_back(std::move(e));
      }
      out.push_back(std::move(s));
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skipBlanks() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r') ++pos_;
  }

  void skipSeparators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ';')) {
      if (peek() == '\n') ++line_;
      ++pos_;
    }
  }

  std::string identifier(const char* what) {
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-') out += text_[pos_++];
    if (out.empty()) fail(Errc::Parse, line_, "", std::string("expected ") + what);
    return out;
  }

  std::string text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

template <class T>
T integerValue(const Entry& e) {
  T v{};
  const char* end = e.value.data() + e.value.size();
  const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(Errc::Parse, e.line, e.key, "expected an integer, got '" + e.value + "'");
  return v;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

DynamicalSystem buildSystem(const Section& s) {
  std::map<std::string, const Entry*> kv;
  for (const auto& e : s.entries) {
    if (e.key != "kind" && e.key != "k" && e.key != "matrix" && e.key != "perm") {
      fail(Errc::Parse, e.line, e.key, "unknown key in system section");
    }
    if (!kv.emplace(e.key, &e).second) fail(Errc::Parse, e.line, e.key, "duplicate key");
  }
  if (!kv.count("kind")) fail(Errc::Parse, s.line, "kind", "system section needs a kind");
  const Entry& kind = *kv.at("kind");
  auto require = [&](const char* key) -> const Entry& {
    if (!kv.count(key)) fail(Errc::Parse, s.line, key, "required for kind " + kind.value);
    return *kv.at(key);
  };
  auto forbid = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) {
      if (kv.count(k)) fail(Errc::Parse, kv.at(k)->line, k, "not allowed for kind " + kind.value);
    }
  };
  try {
    if (kind.value == "circle") {
      forbid({"matrix", "perm"});
      return DynamicalSystem::circle(kv.count("k") ? integerValue<int>(*kv.at("k")) : 2);
    }
    if (kind.value == "sft") {
      forbid({"k", "perm"});
      const Entry& m = require("matrix");
      TransitionMatrix t;
      for (const auto& row : words(m.value)) {
        std::vector<int> r;
        for (char c : row) {
          if (c != '0' && c != '1') fail(Errc::InvalidMatrix, m.line, m.key, "entries must be 0 or 1");
          r.push_back(c - '0');
        }
        t.push_back(std::move(r));
      }
      try {
        return DynamicalSystem::sft(std::move(t));
      } catch (const Error& err) {
        fail(err.code(), m.line, m.key, err.what());
      }
    }
    if (kind.value == "perm") {
      forbid({"k", "matrix"});
      const Entry& p = require("perm");
      std::vector<int> perm;
      for (const auto& w : words(p.value)) perm.push_back(integerValue<int>({p.key, w, p.line}));
      try {
        return DynamicalSystem::permutation(std::move(perm));
      } catch (const Error& err) {
        fail(err.code(), p.line, p.key, err.what());
      }
    }
  } catch (const Error& err) {
    if (err.code() != Errc::InvalidSystem) throw;
    fail(err.code(), kind.line, "k", err.what());
  }
  fail(Errc::Parse, kind.line, "kind", "unknown system kind '" + kind.value + "' (circle, sft, perm)");
}

void applyBudgets(const Section& s, Config& cfg) {
  for (const auto& e : s.entries) {
    if (e.key == "nmax") {
      cfg.budget.nMax = integerValue<int>(e);
      if (cfg.budget.nMax < 1) fail(Errc::BadInput, e.line, e.key, "must be >= 1");
    } else if (e.key == "grid") {
      cfg.budget.gridSize = integerValue<int>(e);
      if (cfg.budget.gridSize < 8) fail(Errc::BadInput, e.line, e.key, "must be >= 8");
    } else if (e.key == "window") {
      cfg.budget.window = integerValue<int>(e);
      if (cfg.budget.window < 1) fail(Errc::BadInput, e.line, e.key, "must be >= 1");
    } else if (e.key == "seed") {
      cfg.budget.seed = integerValue<std::uint64_t>(e);
    } else if (e.key == "tolerance") {
      char* end = nullptr;
      const double t = std::strtod(e.value.c_str(), &end);
      if (end != e.value.c_str() + e.value.size() || !(t > 0.0)) {
        fail(Errc::Parse, e.line, e.key, "expected a positive number");
      }
      cfg.tolerance = t;
    } else {
      fail(Errc::Parse, e.line, e.key, "unknown key in budgets section");
    }
  }
}

Element buildElement(const Section& s, const DynamicalSystem& sys) {
  const Entry* form = nullptr;
  const Entry* expr = nullptr;
  for (const auto& e : s.entries) {
    if (e.key == "form") {
      form = &e;
    } else if (e.key == "expr") {
      expr = &e;
    } else {
      fail(Errc::Parse, e.line, e.key, "unknown key in element section");
    }
  }
  if (!expr) fail(Errc::Parse, s.line, "expr", "element '" + s.name + "' has no expr");
  const std::string f = form ? form->value : "semicrossed";
  if (f != "semicrossed" && f != "crossed" && f != "relation2") {
    fail(Errc::Parse, form->line, "form", "expected semicrossed, crossed or relation2");
  }
  try {
    Element e = parseElement(sys, expr->value, f == "relation2" ? Form::Right : Form::Left);
    if (f != "crossed") requireSemicrossed(e);
    return e;
  } catch (const Error& err) {
    fail(err.code(), expr->line, "expr", err.what());
  }
}

}  // namespace

const Element* Config::element(const std::string& name) const {
  for (const auto& [n, e] : elements) {
    if (n == name) return &e;
  }
  return nullptr;
}

Config parseConfig(const std::string& text) {
  const auto sections = Lexer(text).sections();
  Config cfg;
  bool haveSystem = false, haveBudgets = false;
  for (const auto& s : sections) {
    if (s.kind == "system") {
      if (haveSystem) fail(Errc::Parse, s.line, "", "duplicate system section");
      cfg.system = buildSystem(s);
      haveSystem = true;
    } else if (s.kind == "budgets") {
      if (haveBudgets) fail(Errc::Parse, s.line, "", "duplicate budgets section");
      applyBudgets(s, cfg);
      haveBudgets = true;
    } else if (s.kind != "element") {
      fail(Errc::Parse, s.line, "", "unknown section '" + s.kind + "'");
    }
  }
  for (const auto& s : sections) {
    if (s.kind != "element") continue;
    if (cfg.element(s.name)) fail(Errc::Parse, s.line, "", "duplicate element '" + s.name + "'");
    cfg.elements.emplace_back(s.name, buildElement(s, cfg.system));
  }
  return cfg;
}

Config loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseConfig(buf.str());
}

}  // namespace semicrossed
