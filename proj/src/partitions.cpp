#include "virstag/partitions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace virstag {

namespace {

struct Tables {
  // deque keeps references stable while new grades are appended
  std::deque<std::vector<Partition>> parts;
  std::deque<std::map<Partition, int>> index;
  std::deque<std::vector<int>> order;
};

std::mutex tables_mutex;

Tables& tables() {
  static Tables t;
  return t;
}

void generate(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void ensure(int n) {
  Tables& t = tables();
  while (static_cast<int>(t.parts.size()) <= n) {
    int m = static_cast<int>(t.parts.size());
    std::vector<Partition> list;
    Partition cur;
    generate(m, m, cur, list);
    std::sort(list.begin(), list.end());
    std::map<Partition, int> idx;
    for (int i = 0; i < static_cast<int>(list.size()); ++i) idx[list[i]] = i;
    std::vector<int> order(list.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return ones_count(list[a]) > ones_count(list[b]);
    });
    t.parts.push_back(std::move(list));
    t.index.push_back(std::move(idx));
    t.order.push_back(std::move(order));
  }
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::lock_guard<std::mutex> lock(tables_mutex);
  ensure(n);
  return tables().parts[n];
}

int partition_count(int n) {
  if (n < 0) return 0;
  return static_cast<int>(partitions(n).size());
}

int partition_index(const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  std::lock_guard<std::mutex> lock(tables_mutex);
  ensure(n);
  const auto& idx = tables().index[n];
  auto it = idx.find(p);
  if (it == idx.end()) throw std::invalid_argument("not a partition in descending order");
  return it->second;
}

int ones_count(const Partition& p) {
  return static_cast<int>(std::count(p.begin(), p.end(), 1));
}

const std::vector<int>& ones_priority_order(int n) {
  std::lock_guard<std::mutex> lock(tables_mutex);
  ensure(n);
  return tables().order[n];
}

}  // namespace virstag
