#include "spinblock/serialize.hpp"

#include <sstream>

namespace spinblock {

void to_json(nlohmann::json& j, const StrictPartition& x) { j = x.parts(); }
void to_json(nlohmann::json& j, const PStrictPartition& x) { j = x.parts(); }
void to_json(nlohmann::json& j, const Content& x) { j = x.counts; }

void to_json(nlohmann::json& j, const Abacus& x) {
  j = nlohmann::json{{"p", x.p}, {"runners", x.runners}};
}

void to_json(nlohmann::json& j, const CorePair& x) {
  j = nlohmann::json::array({x.beads, x.side});
}

void to_json(nlohmann::json& j, const CoreTuple& x) { j = x.pairs(); }

void to_json(nlohmann::json& j, const BlockLabel& x) {
  j = nlohmann::json{{"core", x.core}, {"weight", x.weight}, {"rank", x.rank()}};
}

void to_json(nlohmann::json& j, const BlockGraph& x) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : x.edges)
    edges.push_back(nlohmann::json::array({e.from, e.to, e.residue}));
  j = nlohmann::json{{"p", x.p},
                     {"max_rank", x.max_rank},
                     {"vertices", x.vertices},
                     {"edges", edges}};
}

void to_json(nlohmann::json& j, const NodePos& x) {
  j = nlohmann::json::array({x.row, x.col});
}

void to_json(nlohmann::json& j, const NodeGroup& x) { j = x.boxes; }

void to_json(nlohmann::json& j, const AllowedStep& x) {
  j = nlohmann::json{{"action", x.action}, {"from", x.from}, {"to", x.to}};
}

void to_json(nlohmann::json& j, const AllowedComponent& x) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : x.members)
    members.push_back(nlohmann::json{
        {"tuple", m.tuple}, {"rank", m.rank}, {"trace", m.trace}});
  j = nlohmann::json{{"start", x.start},
                     {"w", x.w},
                     {"members", members},
                     {"min_rank_members", x.min_rank_members}};
}

void to_json(nlohmann::json& j, const CompatibilityReport& x) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : x.failures)
    failures.push_back(nlohmann::json{{"lambda", f.lambda},
                                      {"chi", f.chi},
                                      {"count", f.count},
                                      {"expected", f.expected}});
  j = nlohmann::json{{"nu", x.nu},
                     {"mu", x.mu},
                     {"i", x.index},
                     {"w", x.w},
                     {"trivial", x.trivial},
                     {"cond1", x.cond1},
                     {"cond2", nlohmann::json{{"checked", x.pairs_checked},
                                              {"failures", failures},
                                              {"passed", x.cond2}}},
                     {"cond3", x.cond3},
                     {"jn", x.jn_size},
                     {"jm", x.jm_size},
                     {"core_paths", x.core_paths},
                     {"passed", x.passed()}};
}

void to_json(nlohmann::json& j, const ReductionTrace& x) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : x.steps)
    steps.push_back(nlohmann::json{
        {"i", s.action}, {"tuple", s.tuple}, {"rank", rank_from_tuple(s.tuple)}});
  j = nlohmann::json{{"start", x.start},
                     {"steps", steps},
                     {"end", x.end},
                     {"end_rank", rank_from_tuple(x.end)}};
}

void to_json(nlohmann::json& j, const Representative& x) {
  j = nlohmann::json{{"tuple", x.tuple}, {"rank", x.rank}, {"level", x.level}};
}

void to_json(nlohmann::json& j, const CartanData& x) {
  j = nlohmann::json{{"t", x.t}, {"C", x.C}, {"B", x.B}, {"delta", x.delta}, {"c", x.c}};
}

void to_json(nlohmann::json& j, const CoordVector& x) { j = x.n; }

void to_json(nlohmann::json& j, const LevelTable& x) {
  j = nlohmann::json{{"p", x.p}, {"t", x.t}, {"lo", x.lo}, {"hi", x.hi}};
  if (x.t == 2) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < x.side(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < x.side(); ++c) row.push_back(x.at2(r, c));
      rows.push_back(row);
    }
    j["values"] = rows;
  } else {
    j["values"] = x.values;
  }
}

std::string dot_of(const BlockGraph& g) {
  std::ostringstream os;
  os << "digraph blocks {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const BlockLabel& b = g.vertices[i];
    os << "  v" << i << " [label=\"" << to_string(b) << "\\nrank " << b.rank()
       << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.residue << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string csv_of(const LevelTable& t) {
  std::ostringstream os;
  if (t.t == 2) {
    for (int r = 0; r < t.side(); ++r) {
      for (int c = 0; c < t.side(); ++c) {
        if (c) os << ',';
        os << t.at2(r, c);
      }
      os << '\n';
    }
    return os.str();
  }
  std::vector<int> coord(t.t, t.lo);
  for (long long idx = 0; idx < static_cast<long long>(t.values.size()); ++idx) {
    for (int i = 0; i < t.t; ++i) os << coord[i] << ',';
    os << t.values[static_cast<std::size_t>(idx)] << '\n';
    for (int i = t.t - 1; i >= 0; --i) {
      if (coord[i] < t.hi) {
        ++coord[i];
        break;
      }
      coord[i] = t.lo;
    }
  }
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string trimmed;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed.empty()) return out;
  std::istringstream is(trimmed);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in list '" + s + "'");
    std::size_t pos = 0;
    int value = std::stoi(item, &pos);
    if (pos != item.size()) throw DomainError("bad integer '" + item + "'");
    out.push_back(value);
  }
  return out;
}

} // namespace

StrictPartition parse_strict_partition(const std::string& s) {
  return StrictPartition(parse_int_list(s));
}

PStrictPartition parse_p_strict_partition(const std::string& s, int p) {
  return PStrictPartition(parse_int_list(s), p);
}

CoreTuple parse_core_tuple(const std::string& s, int p) {
  std::vector<CorePair> pairs;
  std::string trimmed;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  std::istringstream is(trimmed);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw DomainError("tuple entries look like 'beads:side', got '" + item + "'");
    pairs.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  return CoreTuple(std::move(pairs), p);
}

} // namespace spinblock
