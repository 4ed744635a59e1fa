#include "szego/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace szego {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double to_double(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: value of '" + key + "' is not a number: " + s);
  }
}

int to_int(const std::string& s, const std::string& key) {
  const double v = to_double(s, key);
  if (v != double(long(v)))
    throw ConfigError("config: value of '" + key + "' is not an integer: " + s);
  return int(v);
}

using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

SectionMap read_sections(const std::string& text, const std::string& origin) {
  SectionMap sections;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": malformed section header: " + line);
      section = trim(line.substr(1, line.size() - 2));
      sections[section];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected key = value: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": key outside any [section]");
    sections[section][key] = value;
  }
  return sections;
}

std::vector<cplx> parse_complex_list(const std::string& s,
                                     const std::string& key) {
  // Tokens are re or re+imi / re-imi.
  std::vector<cplx> out;
  for (const auto& tok : split_ws(s)) {
    const std::size_t ipos = tok.find('i');
    if (ipos == std::string::npos) {
      out.emplace_back(to_double(tok, key), 0.0);
      continue;
    }
    std::string body = tok.substr(0, ipos);
    std::size_t split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0)
      throw ConfigError("config: malformed complex token in '" + key + "': " + tok);
    out.emplace_back(to_double(body.substr(0, split), key),
                     to_double(body.substr(split), key));
  }
  return out;
}

}  // namespace

FourierSymbol ExperimentConfig::make_symbol() const {
  if (!symbol_file.empty()) return load_symbol(symbol_file);
  if (symbol_name.empty())
    throw ConfigError("config: no symbol configured");
  return catalog(symbol_name, symbol_params);
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin) {
  SectionMap sections = read_sections(text, origin);
  ExperimentConfig cfg;

  if (auto sit = sections.find("symbol"); sit != sections.end()) {
    for (const auto& [key, value] : sit->second) {
      if (key == "name")
        cfg.symbol_name = value;
      else if (key == "file")
        cfg.symbol_file = value;
      else
        cfg.symbol_params[key] = value;
    }
    if (cfg.symbol_name.empty() && cfg.symbol_file.empty())
      throw ConfigError("config: [symbol] needs 'name' or 'file'");
    if (!cfg.symbol_file.empty()) {
      std::ifstream probe(cfg.symbol_file);
      if (!probe)
        throw ConfigError("config: symbol file does not exist: " + cfg.symbol_file);
    }
  }

  if (auto sit = sections.find("krein"); sit != sections.end()) {
    const auto& kv = sit->second;
    auto a = kv.find("alpha");
    auto b = kv.find("beta");
    if (a == kv.end() || b == kv.end())
      throw ConfigError("config: [krein] needs alpha and beta");
    try {
      cfg.krein.emplace(to_double(a->second, "alpha"), to_double(b->second, "beta"));
    } catch (const NumericalError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }

  if (auto sit = sections.find("function"); sit != sections.end()) {
    const auto& kv = sit->second;
    auto kind = kv.find("kind");
    const std::string kind_s = kind == kv.end() ? "polynomial" : kind->second;
    std::vector<cplx> coeffs;
    if (auto c = kv.find("coeffs"); c != kv.end())
      coeffs = parse_complex_list(c->second, "coeffs");
    if (kind_s == "polynomial") {
      cfg.function = AnalyticFunction::polynomial(coeffs);
    } else if (kind_s == "rational") {
      std::vector<PoleTerm> poles;
      std::vector<cplx> ps, rs;
      std::vector<int> ms;
      if (auto p = kv.find("poles"); p != kv.end())
        ps = parse_complex_list(p->second, "poles");
      if (auto r = kv.find("residues"); r != kv.end())
        rs = parse_complex_list(r->second, "residues");
      if (auto m = kv.find("multiplicities"); m != kv.end())
        for (const auto& tok : split_ws(m->second))
          ms.push_back(to_int(tok, "multiplicities"));
      if (rs.size() != ps.size())
        throw ConfigError("config: poles and residues must have equal length");
      for (std::size_t i = 0; i < ps.size(); ++i)
        poles.push_back({ps[i], i < ms.size() ? ms[i] : 1, rs[i]});
      cfg.function = AnalyticFunction::rational(coeffs, poles);
    } else {
      throw ConfigError("config: unknown function kind: " + kind_s);
    }
  }

  if (auto sit = sections.find("contour"); sit != sections.end()) {
    const auto& kv = sit->second;
    auto shape = kv.find("shape");
    const std::string shape_s = shape == kv.end() ? "circle" : shape->second;
    int nodes = 256;
    if (auto n = kv.find("nodes"); n != kv.end()) nodes = to_int(n->second, "nodes");
    cplx center = 0.0;
    if (auto c = kv.find("center"); c != kv.end()) {
      auto parts = split_ws(c->second);
      if (parts.empty() || parts.size() > 2)
        throw ConfigError("config: center wants 're [im]'");
      center = cplx(to_double(parts[0], "center"),
                    parts.size() > 1 ? to_double(parts[1], "center") : 0.0);
    }
    try {
      if (shape_s == "circle") {
        auto r = kv.find("radius");
        if (r == kv.end()) throw ConfigError("config: circle needs radius");
        cfg.contour = Contour::circle(center, to_double(r->second, "radius"), nodes);
      } else if (shape_s == "ellipse") {
        auto rx = kv.find("rx");
        auto ry = kv.find("ry");
        if (rx == kv.end() || ry == kv.end())
          throw ConfigError("config: ellipse needs rx and ry");
        cfg.contour = Contour::ellipse(center, to_double(rx->second, "rx"),
                                       to_double(ry->second, "ry"), nodes);
      } else if (shape_s == "polyline") {
        auto v = kv.find("vertices");
        if (v == kv.end()) throw ConfigError("config: polyline needs vertices");
        cfg.contour = Contour::polyline(parse_complex_list(v->second, "vertices"),
                                        nodes);
      } else {
        throw ConfigError("config: unknown contour shape: " + shape_s);
      }
    } catch (const NumericalError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }

  if (auto sit = sections.find("experiment"); sit != sections.end()) {
    const auto& kv = sit->second;
    if (auto t = kv.find("tasks"); t != kv.end()) cfg.tasks = split_ws(t->second);
    if (auto n = kv.find("ns"); n != kv.end()) {
      for (const auto& tok : split_ws(n->second))
        cfg.ns.push_back(to_int(tok, "ns"));
      for (std::size_t i = 0; i + 1 < cfg.ns.size(); ++i)
        if (cfg.ns[i] >= cfg.ns[i + 1])
          throw ConfigError("config: ns must be strictly increasing");
    }
    if (auto v = kv.find("bo_tol"); v != kv.end())
      cfg.bo_tol = to_double(v->second, "bo_tol");
    if (auto v = kv.find("residual_tol"); v != kv.end())
      cfg.residual_tol = to_double(v->second, "residual_tol");
    if (auto v = kv.find("rate_slack"); v != kv.end())
      cfg.rate_slack = to_double(v->second, "rate_slack");
  }

  if (auto sit = sections.find("cutoffs"); sit != sections.end()) {
    const auto& kv = sit->second;
    if (auto v = kv.find("band"); v != kv.end()) cfg.band = to_int(v->second, "band");
    if (auto v = kv.find("section"); v != kv.end())
      cfg.section = to_int(v->second, "section");
    if (auto v = kv.find("grid"); v != kv.end())
      cfg.grid_log2 = to_int(v->second, "grid");
  }

  if (auto sit = sections.find("output"); sit != sections.end()) {
    const auto& kv = sit->second;
    if (auto v = kv.find("dir"); v != kv.end()) cfg.output_dir = v->second;
    if (auto v = kv.find("seed"); v != kv.end())
      cfg.seed = std::uint64_t(to_double(v->second, "seed"));
  }

  for (const auto& task : cfg.tasks) {
    static const std::vector<std::string> known = {"bo", "trace", "rate",
                                                   "bounds", "factorization"};
    if (std::find(known.begin(), known.end(), task) == known.end())
      throw ConfigError("config: unknown task '" + task + "'");
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace szego
