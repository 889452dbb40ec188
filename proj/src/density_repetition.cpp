#include "qcprof/density_repetition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

namespace qcprof {

std::optional<double> density_score(const Circuit& c, const Layering& l) {
  if (c.n_qubits < 2 || l.depth < 1) return std::nullopt;
  const double ops = 2.0 * c.n_two_qubit_gates() + c.n_single_qubit_gates();
  return (ops / l.depth - 1.0) / (c.n_qubits - 1.0);
}

std::optional<double> idling_score(const Circuit& c, const Layering& l) {
  if (l.depth < 1 || c.n_qubits < 1) return std::nullopt;
  // One gate per qubit per layer, so q_i = number of distinct active layers.
  std::vector<std::vector<char>> active(c.n_qubits, std::vector<char>(l.depth, 0));
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    for (int q : c.gates[i].qubits) active[q][l.layer_of_gate[i]] = 1;
  std::int64_t idle = 0;
  for (int q = 0; q < c.n_qubits; ++q) {
    int used = 0;
    for (char a : active[q]) used += a;
    idle += l.depth - used;
  }
  return static_cast<double>(idle) / (static_cast<double>(c.n_qubits) * l.depth);
}

namespace {

// Suffix automaton over integer token ids, with end-position counts and the
// minimal end position per state.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const std::vector<int>& seq) {
    states_.reserve(2 * seq.size() + 2);
    make_state(0, -1);
    int last = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) last = extend(last, seq[i], static_cast<int>(i));
    propagate();
  }

  RepetitionFeatureSet longest_repeat() const {
    RepetitionFeatureSet out;
    int best_minpos = std::numeric_limits<int>::max();
    for (const auto& s : states_) {
      if (s.cnt < 2 || s.len < 1) continue;
      if (s.len > out.largest_repeat_len ||
          (s.len == out.largest_repeat_len && s.minpos < best_minpos)) {
        out.largest_repeat_len = s.len;
        out.largest_repeat_count = s.cnt;
        best_minpos = s.minpos;
      }
    }
    return out;
  }

 private:
  struct State {
    int len = 0;
    int link = -1;
    std::map<int, int> next;
    std::int64_t cnt = 0;
    int minpos = std::numeric_limits<int>::max();
  };

  int make_state(int len, int link) {
    State s;
    s.len = len;
    s.link = link;
    states_.push_back(std::move(s));
    return static_cast<int>(states_.size()) - 1;
  }

  int extend(int last, int ch, int pos) {
    int cur = make_state(states_[last].len + 1, -1);
    states_[cur].cnt = 1;
    states_[cur].minpos = pos;
    int p = last;
    while (p >= 0 && !states_[p].next.count(ch)) {
      states_[p].next[ch] = cur;
      p = states_[p].link;
    }
    if (p < 0) {
      states_[cur].link = 0;
    } else {
      int q = states_[p].next[ch];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        int clone = make_state(states_[p].len + 1, states_[q].link);
        states_[clone].next = states_[q].next;
        while (p >= 0 && states_[p].next[ch] == q) {
          states_[p].next[ch] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    return cur;
  }

  // endpos sets union up the suffix links: accumulate counts and minimal
  // positions in decreasing order of len.
  void propagate() {
    std::vector<int> order(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return states_[a].len > states_[b].len; });
    for (int s : order) {
      int l = states_[s].link;
      if (l < 0) continue;
      states_[l].cnt += states_[s].cnt;
      states_[l].minpos = std::min(states_[l].minpos, states_[s].minpos);
    }
  }

  std::vector<State> states_;
};

}  // namespace

RepetitionFeatureSet longest_repeated_subcircuit(const std::vector<std::string>& tokens) {
  if (tokens.size() < 2) return {};
  std::vector<int> ids(tokens.size());
  std::unordered_map<std::string, int> lut;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto [it, inserted] = lut.emplace(tokens[i], static_cast<int>(lut.size()));
    ids[i] = it->second;
  }
  return SuffixAutomaton(ids).longest_repeat();
}

}  // namespace qcprof
