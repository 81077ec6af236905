#include "quadcode/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadcode {

SetPartition SetPartition::from_labels(const std::array<int, 4>& labels) {
  SetPartition p;
  std::array<int, 4> seen{};  // label value per block already assigned
  int blocks = 0;
  for (int pos = 0; pos < 4; ++pos) {
    int b = -1;
    for (int j = 0; j < blocks; ++j) {
      if (seen[static_cast<size_t>(j)] == labels[static_cast<size_t>(pos)]) {
        b = j;
        break;
      }
    }
    if (b < 0) {
      b = blocks++;
      seen[static_cast<size_t>(b)] = labels[static_cast<size_t>(pos)];
    }
    p.rgs_[static_cast<size_t>(pos)] = static_cast<uint8_t>(b);
  }
  return p;
}

int SetPartition::block_count() const {
  return 1 + *std::max_element(rgs_.begin(), rgs_.end());
}

std::string SetPartition::to_string() const {
  std::string out;
  for (int b = 0; b < block_count(); ++b) {
    if (b > 0) out.push_back(',');
    for (int pos = 0; pos < 4; ++pos) {
      if (block_of(pos) == b) out.push_back(static_cast<char>('1' + pos));
    }
  }
  return out;
}

SetPartition pattern_of(const std::array<int, 4>& letters) {
  return SetPartition::from_labels(letters);
}

SetPartition permuted(const SetPartition& p, const std::array<int, 4>& perm) {
  std::array<int, 4> labels{};
  for (int i = 0; i < 4; ++i) labels[static_cast<size_t>(i)] = p.block_of(perm[static_cast<size_t>(i)]);
  return SetPartition::from_labels(labels);
}

PartitionSet PartitionSet::for_q(int q) {
  if (q < 2) throw std::invalid_argument("PartitionSet: q must be at least 2");
  PartitionSet out;
  out.q_ = q;
  out.lookup_.fill(-1);

  // All restricted-growth strings of length 4.
  std::vector<SetPartition> all;
  std::array<int, 4> labels{};
  for (labels[1] = 0; labels[1] <= 1; ++labels[1])
    for (labels[2] = 0; labels[2] <= std::max(labels[1], 0) + 1; ++labels[2])
      for (labels[3] = 0; labels[3] <= std::max({labels[1], labels[2], 0}) + 1; ++labels[3])
        all.push_back(SetPartition::from_labels(labels));

  std::sort(all.begin(), all.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    return a.to_string() < b.to_string();
  });
  for (const SetPartition& p : all) {
    if (p.block_count() > q) continue;
    out.lookup_[p.packed()] = static_cast<int>(out.list_.size());
    out.list_.push_back(p);
    out.names_.push_back(p.to_string());
  }
  return out;
}

int PartitionSet::index_of_name(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  return -1;
}

}  // namespace quadcode
