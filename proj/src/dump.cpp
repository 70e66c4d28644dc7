#include "aq/dump.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "aq/errors.hpp"

namespace aq {

std::string render_dump(const Dump& d) {
  std::ostringstream os;
  os << "bialgebra " << d.name << "\n";
  os << "generators";
  for (const auto& g : d.generators) os << " " << g;
  os << "\norder " << d.order << "\n";
  if (d.degree >= 0) os << "degree " << d.degree << "\n";
  os << "gauge " << d.gauge << "\n";
  for (std::size_t i = 0; i < d.coproducts.entries.size(); ++i)
    for (const auto& [k, c] : d.coproducts.entries[i].terms())
      os << "coproduct " << d.generators[i] << " : " << render_term(k, c, d.generators) << "\n";
  for (const auto& [ij, v] : d.commutators.entries)
    for (const auto& [k, c] : v.terms())
      os << "bracket " << d.generators[static_cast<std::size_t>(ij.first)] << " "
         << d.generators[static_cast<std::size_t>(ij.second)] << " : " << render_term(k, c, d.generators) << "\n";
  for (const auto& g : d.diagnostics)
    os << "# diag " << g.phase << " " << g.order << " " << g.subject << " unknowns " << g.unknowns << " rank " << g.rank
       << " kernel " << g.kernel << "\n";
  return os.str();
}

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int to_int(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(line, 1, "malformed " + what + " '" + s + "'");
  }
}

}  // namespace

Dump parse_dump(const std::string& text) {
  Dump d;
  bool have_name = false, have_gens = false, have_order = false, tables_ready = false;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  auto index = [&](const std::string& g, int col) {
    for (std::size_t i = 0; i < d.generators.size(); ++i)
      if (d.generators[i] == g) return static_cast<int>(i);
    throw ParseError(no, col, "unknown generator '" + g + "'");
  };
  auto ready = [&](int col) {
    if (tables_ready) return;
    if (!have_gens || !have_order) throw ParseError(no, col, "terms before the generators and order headers");
    d.commutators = CommutatorTable(d.generators.size(), d.truncation());
    d.coproducts = CoproductTable(d.generators.size(), d.truncation());
    tables_ready = true;
  };
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto w = words(line);
    if (w.empty()) continue;
    if (w[0][0] == '#') {
      if (w.size() >= 2 && w[0] == "#" && w[1] == "diag") {
        if (w.size() != 11 || w[5] != "unknowns" || w[7] != "rank" || w[9] != "kernel")
          throw ParseError(no, 1, "malformed diagnostics line");
        d.diagnostics.push_back({to_int(w[3], no, "order"), w[2], w[4], to_int(w[6], no, "count"),
                                 to_int(w[8], no, "rank"), to_int(w[10], no, "kernel")});
      }
      continue;
    }
    const std::string& head = w[0];
    if (head == "bialgebra") {
      if (w.size() != 2) throw ParseError(no, 1, "expected 'bialgebra NAME'");
      d.name = w[1];
      have_name = true;
    } else if (head == "generators") {
      if (tables_ready || have_gens) throw ParseError(no, 1, "unexpected generators line");
      d.generators.assign(w.begin() + 1, w.end());
      if (d.generators.empty()) throw ParseError(no, 1, "no generators");
      if (std::set<std::string>(d.generators.begin(), d.generators.end()).size() != d.generators.size())
        throw ParseError(no, 1, "duplicate generator");
      have_gens = true;
    } else if (head == "order") {
      if (w.size() != 2 || tables_ready) throw ParseError(no, 1, "expected 'order N' before any term");
      d.order = to_int(w[1], no, "order");
      if (d.order < 0) throw ParseError(no, 7, "negative order");
      have_order = true;
    } else if (head == "degree") {
      if (w.size() != 2 || tables_ready) throw ParseError(no, 1, "expected 'degree D' before any term");
      d.degree = to_int(w[1], no, "degree");
      if (d.degree < 0) throw ParseError(no, 8, "negative degree");
    } else if (head == "gauge") {
      if (w.size() != 2) throw ParseError(no, 1, "expected 'gauge ID'");
      d.gauge = w[1];
    } else if (head == "coproduct" || head == "bracket") {
      const auto colon = line.find(" : ");
      if (colon == std::string::npos) throw ParseError(no, 1, "expected ' : ' before the term");
      ready(1);
      const int term_col = static_cast<int>(colon) + 4;
      const auto lhs = words(line.substr(0, colon));
      const std::string term = line.substr(colon + 3);
      try {
        if (head == "coproduct") {
          if (lhs.size() != 2) throw ParseError(no, 1, "expected 'coproduct X : term'");
          const int i = index(lhs[1], static_cast<int>(line.find(lhs[1])) + 1);
          auto [k, c] = parse_tensor_term(term, d.generators);
          auto& e = d.coproducts.entries[static_cast<std::size_t>(i)];
          if (!e.admits(k)) throw ParseError(no, term_col, "term outside the truncation");
          if (e.coefficient(k) != 0) throw ParseError(no, term_col, "duplicate term");
          e.add(k, c);
        } else {
          if (lhs.size() != 3) throw ParseError(no, 1, "expected 'bracket A B : term'");
          const int a = index(lhs[1], 8), b = index(lhs[2], 8 + static_cast<int>(lhs[1].size()) + 1);
          if (a >= b) throw ParseError(no, 8, "bracket pairs must be listed in generator order");
          auto [k, c] = parse_term(term, d.generators);
          SeriesElement probe(d.truncation());
          if (!probe.admits(k)) throw ParseError(no, term_col, "term outside the truncation");
          if (d.commutators.bracket(a, b).coefficient(k) != 0) throw ParseError(no, term_col, "duplicate term");
          d.commutators.add(a, b, k, c);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(no, term_col, e.what());
      }
    } else {
      throw ParseError(no, 1, "unknown line kind '" + head + "'");
    }
  }
  if (!have_name) throw ParseError(no, 1, "missing 'bialgebra' header");
  if (!have_gens || !have_order) throw ParseError(no, 1, "missing generators or order header");
  if (!tables_ready) {
    d.commutators = CommutatorTable(d.generators.size(), d.truncation());
    d.coproducts = CoproductTable(d.generators.size(), d.truncation());
  }
  return d;
}

Dump read_dump_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open dump '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_dump(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

Dump to_dump(const DeformationResult& r) {
  Dump d;
  d.name = r.bialgebra.name;
  d.generators = r.bialgebra.generators;
  d.order = r.order;
  d.gauge = gauge_id(r.gauge);
  d.commutators = r.commutators;
  d.coproducts = r.coproducts;
  d.diagnostics = r.diagnostics;
  return d;
}

DeformationResult to_result(const Dump& d) {
  if (d.degree >= 0) throw InputError("a graded presentation is not a deformation result");
  DeformationResult r;
  r.bialgebra.name = d.name;
  r.bialgebra.generators = d.generators;
  const std::size_t n = d.generators.size();
  for (const auto& [ij, v] : d.commutators.entries) {
    LinearForm f;
    for (const auto& [k, c] : v.terms()) {
      if (k.z != 0) continue;
      if (k.m.degree() != 1) throw InputError("z^0 bracket term is not linear");
      f[k.m.first_index()] += c;
    }
    r.bialgebra.set_bracket(ij.first, ij.second, std::move(f));
  }
  for (std::size_t i = 0; i < n; ++i) {
    WedgeForm w;
    for (const auto& [k, c] : d.coproducts.entries[i].terms())
      if (k.z == 1 && k.l.degree() == 1 && k.r.degree() == 1 && k.l.first_index() < k.r.first_index())
        w[{k.l.first_index(), k.r.first_index()}] += c;
    r.bialgebra.set_cocommutator(static_cast<int>(i), std::move(w));
  }
  r.order = d.order;
  r.gauge = parse_gauge(d.gauge);
  r.commutators = d.commutators;
  r.coproducts = d.coproducts;
  r.diagnostics = d.diagnostics;
  return r;
}

bool operator==(const DeformationResult& a, const DeformationResult& b) {
  return a.bialgebra == b.bialgebra && a.order == b.order && a.gauge == b.gauge && a.commutators == b.commutators &&
         a.coproducts == b.coproducts && a.diagnostics == b.diagnostics;
}

std::vector<std::string> diff_dumps(const Dump& a, const Dump& b) {
  std::vector<std::string> out;
  if (a.generators != b.generators) {
    out.push_back("! generators differ");
    return out;
  }
  if (a.order != b.order) out.push_back("! order " + std::to_string(a.order) + " != " + std::to_string(b.order));
  if (a.degree != b.degree) out.push_back("! degree " + std::to_string(a.degree) + " != " + std::to_string(b.degree));
  const auto& g = a.generators;
  auto compare = [&](const std::string& label, const auto& x, const auto& y) {
    auto it = x.terms().begin(), jt = y.terms().begin();
    while (it != x.terms().end() || jt != y.terms().end()) {
      if (jt == y.terms().end() || (it != x.terms().end() && it->first < jt->first)) {
        out.push_back("- " + label + " : " + render_term(it->first, it->second, g));
        ++it;
      } else if (it == x.terms().end() || jt->first < it->first) {
        out.push_back("+ " + label + " : " + render_term(jt->first, jt->second, g));
        ++jt;
      } else {
        if (it->second != jt->second) {
          out.push_back("- " + label + " : " + render_term(it->first, it->second, g));
          out.push_back("+ " + label + " : " + render_term(jt->first, jt->second, g));
        }
        ++it;
        ++jt;
      }
    }
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    compare("coproduct " + g[i], a.coproducts.entries[i], b.coproducts.entries[i]);
  std::set<std::pair<int, int>> pairs;
  for (const auto& [ij, v] : a.commutators.entries) pairs.insert(ij);
  for (const auto& [ij, v] : b.commutators.entries) pairs.insert(ij);
  for (const auto& [i, j] : pairs)
    compare("bracket " + g[static_cast<std::size_t>(i)] + " " + g[static_cast<std::size_t>(j)],
            a.commutators.bracket(i, j), b.commutators.bracket(i, j));
  return out;
}

}  // namespace aq
