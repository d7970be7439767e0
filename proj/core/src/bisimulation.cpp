#include "hfset/bisimulation.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace hfset {
namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

struct Block {
  std::uint32_t begin;
  std::uint32_t end;
  std::uint32_t compound;  // index of the enclosing compound block
  std::uint32_t marked = 0;

  std::uint32_t size() const { return end - begin; }
};

struct Compound {
  std::vector<std::uint32_t> blocks;
};

class Refiner {
 public:
  explicit Refiner(std::span<const std::vector<std::uint32_t>> successors)
      : n_(static_cast<std::uint32_t>(successors.size())) {
    build_edges(successors);
    elems_.resize(n_);
    std::iota(elems_.begin(), elems_.end(), 0u);
    pos_ = elems_;
    block_of_.assign(n_, 0);
    in_set_.assign(n_, 0);
    b_counter_.assign(n_, kNone);
    s_counter_.assign(n_, kNone);
    blocks_.push_back(Block{0, n_, 0});
    compounds_.push_back(Compound{{0}});

    // Initial split: nodes with at least one successor versus leaves.
    std::vector<std::uint32_t> inner;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (out_begin_[v] != out_begin_[v + 1]) inner.push_back(v);
    }
    split(inner);

    // One counter per node for the universe block: its out-degree.
    edge_counter_.resize(edge_src_.size());
    for (std::uint32_t v = 0; v < n_; ++v) {
      const std::uint32_t degree = out_begin_[v + 1] - out_begin_[v];
      if (degree == 0) continue;
      const auto counter = static_cast<std::uint32_t>(counts_.size());
      counts_.push_back(degree);
      for (std::uint32_t e = out_begin_[v]; e < out_begin_[v + 1]; ++e) edge_counter_[e] = counter;
    }
  }

  std::vector<std::uint32_t> run() {
    while (!pending_.empty()) {
      const std::uint32_t s = pending_.back();
      if (compounds_[s].blocks.size() < 2) {
        pending_.pop_back();
        continue;
      }
      refine_against(s);
    }
    return numbered();
  }

 private:
  void build_edges(std::span<const std::vector<std::uint32_t>> successors) {
    out_begin_.assign(n_ + 1, 0);
    std::vector<std::uint32_t> kids;
    for (std::uint32_t v = 0; v < n_; ++v) {
      kids.assign(successors[v].begin(), successors[v].end());
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      for (std::uint32_t w : kids) {
        edge_src_.push_back(v);
        edge_dst_.push_back(w);
      }
      out_begin_[v + 1] = static_cast<std::uint32_t>(edge_src_.size());
    }
    in_begin_.assign(n_ + 1, 0);
    for (std::uint32_t w : edge_dst_) ++in_begin_[w + 1];
    for (std::uint32_t v = 0; v < n_; ++v) in_begin_[v + 1] += in_begin_[v];
    in_edges_.resize(edge_dst_.size());
    std::vector<std::uint32_t> fill(in_begin_.begin(), in_begin_.end() - 1);
    for (std::uint32_t e = 0; e < edge_dst_.size(); ++e) in_edges_[fill[edge_dst_[e]]++] = e;
  }

  // Splits every block that meets `nodes` into its marked and unmarked parts.
  // `nodes` must be duplicate-free.
  void split(const std::vector<std::uint32_t>& nodes) {
    std::vector<std::uint32_t> touched;
    for (std::uint32_t v : nodes) {
      Block& b = blocks_[block_of_[v]];
      if (b.marked == 0) touched.push_back(block_of_[v]);
      const std::uint32_t target = b.begin + b.marked;
      const std::uint32_t other = elems_[target];
      std::swap(elems_[pos_[v]], elems_[target]);
      pos_[other] = pos_[v];
      pos_[v] = target;
      ++b.marked;
    }
    for (std::uint32_t id : touched) {
      const std::uint32_t marked = blocks_[id].marked;
      blocks_[id].marked = 0;
      if (marked == blocks_[id].size()) continue;
      const auto fresh = static_cast<std::uint32_t>(blocks_.size());
      const std::uint32_t begin = blocks_[id].begin;
      const std::uint32_t compound = blocks_[id].compound;
      blocks_.push_back(Block{begin, begin + marked, compound});
      blocks_[id].begin = begin + marked;
      for (std::uint32_t i = begin; i < begin + marked; ++i) block_of_[elems_[i]] = fresh;
      auto& members = compounds_[compound].blocks;
      members.push_back(fresh);
      if (members.size() == 2) pending_.push_back(compound);
    }
  }

  void refine_against(std::uint32_t s) {
    auto& members = compounds_[s].blocks;
    const std::uint32_t first = members[0];
    const std::uint32_t second = members[1];
    const std::uint32_t splitter = blocks_[first].size() <= blocks_[second].size() ? first : second;
    members.erase(std::find(members.begin(), members.end(), splitter));

    const auto lone = static_cast<std::uint32_t>(compounds_.size());
    compounds_.push_back(Compound{{splitter}});
    blocks_[splitter].compound = lone;

    const std::vector<std::uint32_t> splitter_nodes(elems_.begin() + blocks_[splitter].begin,
                                                    elems_.begin() + blocks_[splitter].end);

    // Predecessors of the splitter with their edge counts into it.
    std::vector<std::uint32_t> preds;
    for (std::uint32_t y : splitter_nodes) {
      for (std::uint32_t i = in_begin_[y]; i < in_begin_[y + 1]; ++i) {
        const std::uint32_t e = in_edges_[i];
        const std::uint32_t x = edge_src_[e];
        if (!in_set_[x]) {
          in_set_[x] = 1;
          preds.push_back(x);
          b_counter_[x] = static_cast<std::uint32_t>(counts_.size());
          counts_.push_back(0);
          s_counter_[x] = edge_counter_[e];
        }
        ++counts_[b_counter_[x]];
      }
    }

    split(preds);

    // Nodes whose every edge into s lands in the splitter.
    std::vector<std::uint32_t> exclusive;
    for (std::uint32_t x : preds) {
      if (counts_[b_counter_[x]] == counts_[s_counter_[x]]) exclusive.push_back(x);
    }
    split(exclusive);

    for (std::uint32_t y : splitter_nodes) {
      for (std::uint32_t i = in_begin_[y]; i < in_begin_[y + 1]; ++i) {
        const std::uint32_t e = in_edges_[i];
        --counts_[edge_counter_[e]];
        edge_counter_[e] = b_counter_[edge_src_[e]];
      }
    }
    for (std::uint32_t x : preds) in_set_[x] = 0;
  }

  std::vector<std::uint32_t> numbered() const {
    std::vector<std::uint32_t> renumber(blocks_.size(), kNone);
    std::vector<std::uint32_t> result(n_);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::uint32_t& r = renumber[block_of_[v]];
      if (r == kNone) r = next++;
      result[v] = r;
    }
    return result;
  }

  std::uint32_t n_;
  std::vector<std::uint32_t> out_begin_, in_begin_, in_edges_;
  std::vector<std::uint32_t> edge_src_, edge_dst_, edge_counter_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> elems_, pos_, block_of_;
  std::vector<char> in_set_;
  std::vector<std::uint32_t> b_counter_, s_counter_;
  std::vector<Block> blocks_;
  std::vector<Compound> compounds_;
  std::vector<std::uint32_t> pending_;
};

}  // namespace

std::vector<std::uint32_t> maximum_bisimulation(
    std::span<const std::vector<std::uint32_t>> successors) {
  if (successors.empty()) return {};
  return Refiner(successors).run();
}

}  // namespace hfset
