#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "semicrossed/config.hpp"
#include "semicrossed/error.hpp"
#include "semicrossed/expr.hpp"
#include "semicrossed/verify.hpp"

using namespace semicrossed;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt(cplx v) { return fmt(v.real()) + "," + fmt(v.imag()); }

// Defects and tolerances span 1e-12..1, too small for six fixed decimals.
std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

Element resolveElement(const Config& cfg, const std::string& text, Form form) {
  if (const Element* e = cfg.element(text)) {
    if (form == Form::Right && e->form != Form::Right) return toRelation2(*e);
    return *e;
  }
  return parseElement(cfg.system, text, form);
}

std::vector<std::string> split(const std::string& s, char sep, std::size_t maxParts) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < maxParts) {
    const auto p = s.find(sep, start);
    if (p == std::string::npos) break;
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  out.push_back(s.substr(start));
  return out;
}

int toInt(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::Parse, std::string("expected an integer ") + what + ", got '" + s + "'");
}

int runClassify(const Config& cfg, const std::string& text, std::ostream& out) {
  const Point x = parsePoint(cfg.system, text);
  const Classification c = classify(cfg.system, x, std::int64_t{1} << 24);
  out << "point\tclass\tperiod\tpreperiod\n";
  const char* kind = "unresolved";
  switch (c.kind) {
    case Classification::Kind::Periodic: kind = "periodic"; break;
    case Classification::Kind::EventuallyPeriodic: kind = "eventually-periodic"; break;
    case Classification::Kind::Aperiodic: kind = "aperiodic"; break;
    case Classification::Kind::Unresolved: break;
  }
  out << toString(x) << '\t' << kind << '\t' << c.period << '\t' << c.preperiod << '\n';
  return 0;
}

int runLift(const Config& cfg, const std::string& pointText, const std::string& chooserText, std::ostream& out) {
  const Point x = parsePoint(cfg.system, pointText);
  const ExtPoint xt = liftPoint(cfg.system, x, parseChooser(chooserText));
  out << "m\tcoordinate\n";
  for (int m = 1; m <= 16; ++m) out << m << '\t' << toString(coordinate(xt, m)) << '\n';
  out << "\nclassification " << toString(classifyExt(cfg.system, xt, 256)) << '\n';
  return 0;
}

int runProperties(const Config& cfg, std::ostream& out) {
  if (cfg.system.kind() != DynamicalSystem::Kind::Sft) throw Error(Errc::BadInput, "properties needs an sft system");
  out << "property\tbase\textension\tagree\n";
  int rc = 0;
  for (auto p : {SftProperty::Transitive, SftProperty::DensePeriodic, SftProperty::Minimal, SftProperty::DenseRecurrent}) {
    const TransferResult r = verifyTransfer(cfg.system, p);
    out << propertyName(p) << '\t' << (r.base ? "true" : "false") << '\t' << (r.extension ? "true" : "false") << '\t'
        << (r.base == r.extension ? "yes" : "no") << '\n';
    if (r.base != r.extension) rc = 1;
  }
  return rc;
}

// orbit:<point>:<n> | periodic:<point>:<lambda> | bilateral:<point>:<M>[:<chooser>]
// | backward:<point>:<n>[:<chooser>]
int runRepmat(const Config& cfg, const std::string& spec, const std::string& elementText, std::ostream& out) {
  const auto parts = split(spec, ':', 4);
  if (parts.size() < 3) throw Error(Errc::Parse, "rep spec needs kind:point:size, got '" + spec + "'");
  const auto& sys = cfg.system;
  const Point x = parsePoint(sys, parts[1]);
  const Chooser chooser = parts.size() == 4 ? parseChooser(parts[3]) : Chooser{AlwaysMin{}};
  auto lift = [&] {
    if (!std::holds_alternative<ProceduralWord>(x) && classify(sys, x, 1 << 20).isPeriodic()) return extendPeriodic(sys, x);
    return liftPoint(sys, x, chooser);
  };
  Matrix m;
  if (parts[0] == "orbit") {
    m = orbitRepMatrix(sys, x, resolveElement(cfg, elementText, Form::Left), toInt(parts[2], "size"));
  } else if (parts[0] == "periodic") {
    m = periodicRepMatrix(sys, x, parseScalar(parts[2]), resolveElement(cfg, elementText, Form::Left));
  } else if (parts[0] == "bilateral") {
    m = bilateralRepMatrix(sys, lift(), resolveElement(cfg, elementText, Form::Left), toInt(parts[2], "window"));
  } else if (parts[0] == "backward") {
    m = backwardRepMatrix(sys, lift(), resolveElement(cfg, elementText, Form::Right), toInt(parts[2], "size"));
  } else {
    throw Error(Errc::Parse, "unknown representation '" + parts[0] + "'");
  }
  out << "row";
  for (Eigen::Index c = 0; c < m.cols(); ++c) out << '\t' << c;
  out << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << r;
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << '\t' << fmt(m(r, c));
    out << '\n';
  }
  return 0;
}

int runNorm(const Config& cfg, const std::string& elementText, std::ostream& out) {
  const Element f = resolveElement(cfg, elementText, Form::Left);
  const auto samples = defaultSamples(cfg.system, cfg.budget);
  const NormEstimate est = semicrossedNorm(cfg.system, f, samples, cfg.budget.nMax, cfg.budget.gridSize);
  out << "family\tpoint\tparameter\tvalue\n";
  for (const auto& t : est.traces) out << t.family << '\t' << t.point << '\t' << fmt(t.parameter) << '\t' << fmt(t.value) << '\n';
  out << "\nlower " << fmt(est.bracket.lower) << " upper " << fmt(est.bracket.upper) << " witness " << est.witness << '\n';
  out << "budget nmax " << cfg.budget.nMax << " grid " << cfg.budget.gridSize << " seed " << cfg.budget.seed
      << " upper-method " << est.bracket.upperMethod << '\n';
  return 0;
}

int runVerify(const Config& cfg, const std::string& which, bool strict, std::ostream& out) {
  std::vector<std::string> names;
  if (which == "all") {
    names = checkNames();
  } else {
    names.push_back(which);
  }
  VerifyOptions opt{cfg.budget, cfg.tolerance};
  out << "check\titem\tmeasured\ttolerance\tresult\n";
  int rc = 0;
  for (const auto& n : names) {
    for (const auto& r : runCheck(n, opt)) {
      out << r.check << '\t' << r.item << '\t' << sci(r.measured) << '\t' << sci(r.tolerance) << '\t'
          << (r.pass ? "pass" : "FAIL") << '\n';
      if (!r.pass) {
        rc = 1;
        if (strict) return rc;
      }
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semicrossed products of dynamical systems: representations, norms, checks"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string configPath, outPath;
  std::optional<std::uint64_t> seed;
  std::optional<int> nmax, grid, window;
  bool strict = false;
  app.add_option("--config", configPath, "Configuration file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--nmax", nmax, "Largest orbit truncation");
  app.add_option("--grid", grid, "Lambda grid size");
  app.add_option("--window", window, "Bilateral half-width");
  app.add_option("--out", outPath, "Write output here instead of standard output");
  app.add_flag("--strict", strict, "Stop at the first failing row");

  std::string a1, a2;
  auto* classifyCmd = app.add_subcommand("classify", "Classify a point");
  classifyCmd->add_option("point", a1)->required();
  auto* liftCmd = app.add_subcommand("lift", "Backward coordinates of a lift");
  liftCmd->add_option("point", a1)->required();
  liftCmd->add_option("chooser", a2, "min | random:<seed> | tail:<i,j,...>")->default_val("min");
  auto* propCmd = app.add_subcommand("properties", "SFT properties for the shift and its extension");
  auto* repCmd = app.add_subcommand("repmat", "Representation matrix as TSV");
  repCmd->add_option("spec", a1, "orbit:<pt>:<n> | periodic:<pt>:<lambda> | bilateral:<pt>:<M>[:<chooser>] | backward:<pt>:<n>[:<chooser>]")
      ->required();
  repCmd->add_option("element", a2, "Element name from the config, or an expression")->required();
  auto* normCmd = app.add_subcommand("norm", "Norm bracket with convergence traces");
  normCmd->add_option("element", a1)->required();
  auto* verifyCmd = app.add_subcommand("verify", "Run a built-in check");
  verifyCmd->add_option("check", a1)->required()->check(CLI::IsMember([] {
    auto n = checkNames();
    n.push_back("all");
    return n;
  }()));

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = configPath.empty() ? Config{} : loadConfig(configPath);
    if (seed) cfg.budget.seed = *seed;
    if (nmax) cfg.budget.nMax = *nmax;
    if (grid) cfg.budget.gridSize = *grid;
    if (window) cfg.budget.window = *window;

    std::unique_ptr<std::ofstream> file;
    if (!outPath.empty()) {
      file = std::make_unique<std::ofstream>(outPath);
      if (!*file) throw Error(Errc::BadInput, "cannot write " + outPath);
    }
    std::ostream& out = file ? *file : std::cout;

    if (*classifyCmd) return runClassify(cfg, a1, out);
    if (*liftCmd) return runLift(cfg, a1, a2, out);
    if (*propCmd) return runProperties(cfg, out);
    if (*repCmd) return runRepmat(cfg, a1, a2, out);
    if (*normCmd) return runNorm(cfg, a1, out);
    if (*verifyCmd) return runVerify(cfg, a1, strict, out);
  } catch (const Error& e) {
    std::cerr << "error\t" << e.what() << '\n';
    return 2;
  }
  return 0;
}
