#include "vk/chords.hpp"

#include <random>
#include <regex>
#include <sstream>

namespace vk {

namespace {

struct Located {
  int arc;
  CrossingPassage passage;
};

auto locate(const SingularKnotDiagram& k) -> std::map<int, std::vector<Located>> {
  std::map<int, std::vector<Located>> out;
  for (std::size_t a = 0; a < k.passages.size(); ++a)
    for (const auto& p : k.passages[a]) out[p.id].push_back(Located{static_cast<int>(a), p});
  return out;
}

void check_crossings(const SingularKnotDiagram& k) {
  for (const auto& [id, ps] : locate(k)) {
    if (ps.size() != 2) throw ParseError("crossing " + std::to_string(id) + " must be passed exactly twice");
    if (ps[0].passage.over == ps[1].passage.over)
      throw ParseError("crossing " + std::to_string(id) + " needs one over and one under passage");
    if (ps[0].passage.sign != ps[1].passage.sign)
      throw ParseError("crossing " + std::to_string(id) + " has inconsistent signs");
  }
}

} // namespace

auto parse_knot_diagram(const std::string& text) -> SingularKnotDiagram {
  static const std::regex crossing("([ou])([0-9]+)([+-])");
  std::istringstream in(text);
  std::vector<std::string> chords;
  std::vector<std::pair<int, CrossingPassage>> pending; // chord tokens seen so far, passage
  for (std::string t; in >> t;) {
    std::smatch mt;
    if (std::regex_match(t, mt, crossing)) {
      CrossingPassage p{std::stoi(mt[2].str()), mt[1].str() == "o", mt[3].str() == "+" ? 1 : -1};
      pending.emplace_back(static_cast<int>(chords.size()), p);
    } else {
      chords.push_back(t);
    }
  }
  std::string word;
  for (const auto& c : chords) word += c + " ";
  SingularKnotDiagram k;
  k.diagram = parse_diagram(word);
  const int arcs = k.diagram.arcs();
  k.passages.assign(static_cast<std::size_t>(arcs), {});
  // Passages before the first chord token close the last arc.
  std::vector<CrossingPassage> head;
  for (const auto& [seen, p] : pending) {
    if (seen == 0)
      head.push_back(p);
    else
      k.passages[static_cast<std::size_t>(seen - 1)].push_back(p);
  }
  auto& last = k.passages[static_cast<std::size_t>(arcs - 1)];
  last.insert(last.end(), head.begin(), head.end());
  check_crossings(k);
  return k;
}

auto format_knot_diagram(const SingularKnotDiagram& k) -> std::string {
  std::string out;
  for (int a = 0; a < k.diagram.arcs(); ++a) {
    if (a > 0) out += ' ';
    out += std::to_string(k.diagram.chord_at[static_cast<std::size_t>(a)] + 1);
    for (const auto& p : k.passages[static_cast<std::size_t>(a)])
      out += std::string(" ") + (p.over ? "o" : "u") + std::to_string(p.id) + (p.sign > 0 ? "+" : "-");
  }
  return out;
}

auto crossing_arcs(const SingularKnotDiagram& k, int id) -> std::tuple<int, int, int> {
  const auto all = locate(k);
  const auto it = all.find(id);
  if (it == all.end() || it->second.size() != 2) throw std::invalid_argument("no crossing " + std::to_string(id));
  const auto& ps = it->second;
  const auto& under = ps[0].passage.over ? ps[1] : ps[0];
  const auto& over = ps[0].passage.over ? ps[0] : ps[1];
  return {under.arc, over.arc, under.passage.sign};
}

auto evaluate_arrow_formula(const SingularKnotDiagram& k, const ArrowFormula& f) -> mpq_class {
  if (f.arcs != k.diagram.arcs()) throw std::invalid_argument("formula and diagram have different arcs");
  check_crossings(k);
  mpq_class total = f.constant;
  for (const auto& [id, ps] : locate(k)) {
    const auto [under, over, sign] = crossing_arcs(k, id);
    total += sign * mpq_class(f.at(under, over));
  }
  if (f.doubled) total /= 2;
  return total;
}

auto crossing_change(const SingularKnotDiagram& k, int id) -> SingularKnotDiagram {
  auto out = k;
  int hits = 0;
  for (auto& arc : out.passages)
    for (auto& p : arc)
      if (p.id == id) {
        p.over = !p.over;
        p.sign = -p.sign;
        ++hits;
      }
  if (hits != 2) throw std::invalid_argument("no crossing " + std::to_string(id));
  return out;
}

auto random_knot_diagram(const ChordDiagram& d, int crossings, unsigned seed) -> SingularKnotDiagram {
  std::mt19937 rng(seed);
  SingularKnotDiagram k;
  k.diagram = d;
  k.passages.assign(static_cast<std::size_t>(d.arcs()), {});
  std::uniform_int_distribution<int> arc(0, d.arcs() - 1);
  auto insert = [&](const CrossingPassage& p) {
    auto& list = k.passages[static_cast<std::size_t>(arc(rng))];
    std::uniform_int_distribution<std::size_t> at(0, list.size());
    list.insert(list.begin() + static_cast<long>(at(rng)), p);
  };
  for (int id = 1; id <= crossings; ++id) {
    const int sign = rng() % 2 == 0 ? 1 : -1;
    insert(CrossingPassage{id, true, sign});
    insert(CrossingPassage{id, false, sign});
  }
  return k;
}

} // namespace vk
