#ifndef SEPSYM_SRC_SCAN_UTIL_HPP
#define SEPSYM_SRC_SCAN_UTIL_HPP

#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sepsym {
namespace detail {

struct Slot {
  std::uint64_t pos = 0;
  std::vector<std::uint32_t> counts;
};

// Keeps the two earliest slots per signature; any two slots conflict.
struct PairBucket {
  std::optional<Slot> first, second;

  void offer(std::uint32_t, Slot&& s) {
    if (!first) {
      first = std::move(s);
    } else if (s.pos < first->pos) {
      second = std::move(first);
      first = std::move(s);
    } else if (!second || s.pos < second->pos) {
      second = std::move(s);
    }
  }

  void merge(PairBucket&& o) {
    if (o.first) offer(0, std::move(*o.first));
    if (o.second) offer(0, std::move(*o.second));
  }

  std::optional<std::pair<Slot, Slot>> candidate() const {
    if (!second) return std::nullopt;
    return std::pair(*first, *second);
  }
};

// Keeps the earliest slot per distinct mark; slots with different marks
// conflict. Earliest conflicting pair = (earliest slot, earliest slot whose
// mark differs from it).
struct MarkedBucket {
  struct Entry {
    std::uint32_t mark;
    Slot slot;
  };
  std::vector<Entry> entries;

  void offer(std::uint32_t mark, Slot&& s) {
    for (auto& e : entries) {
      if (e.mark == mark) {
        if (s.pos < e.slot.pos) e.slot = std::move(s);
        return;
      }
    }
    entries.push_back(Entry{mark, std::move(s)});
  }

  void merge(MarkedBucket&& o) {
    for (auto& e : o.entries) offer(e.mark, std::move(e.slot));
  }

  std::optional<std::pair<Slot, Slot>> candidate() const {
    if (entries.size() < 2) return std::nullopt;
    const Entry* base = &entries[0];
    for (const auto& e : entries)
      if (e.slot.pos < base->slot.pos) base = &e;
    const Entry* other = nullptr;
    for (const auto& e : entries) {
      if (e.mark == base->mark) continue;
      if (!other || e.slot.pos < other->slot.pos) other = &e;
    }
    if (!other) return std::nullopt;
    return std::pair(base->slot, other->slot);
  }
};

// Shards a stream by its first coordinate, groups items by signature key in
// per-worker maps, merges, and returns the conflicting pair minimizing
// (first position, second position). The result does not depend on the
// worker count.
//
// make_stream(first_count) must yield a stream with next()/counts()/position()
// and globally consistent positions; make_key_fn() builds a worker-local
// callable uint32(counts, std::string& key_out).
template <class Bucket, class StreamFactory, class KeyFnFactory>
std::optional<std::pair<Slot, Slot>> find_first_conflict(std::uint32_t max_first, unsigned workers,
                                                         const StreamFactory& make_stream,
                                                         const KeyFnFactory& make_key_fn) {
  using Map = std::unordered_map<std::string, Bucket>;
  if (workers < 1) workers = 1;
  if (workers > max_first + 1) workers = max_first + 1;

  auto work = [&](unsigned w) -> Map {
    Map local;
    auto key_fn = make_key_fn();
    std::string key;
    for (std::uint64_t first = w; first <= max_first; first += workers) {
      auto stream = make_stream(static_cast<std::uint32_t>(first));
      while (stream.next()) {
        key.clear();
        std::uint32_t mark = key_fn(stream.counts(), key);
        local[key].offer(mark, Slot{stream.position(), stream.counts()});
      }
    }
    return local;
  };

  Map global;
  if (workers == 1) {
    global = work(0);
  } else {
    std::vector<std::future<Map>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, work, w));
    for (auto& f : futures) {
      Map m = f.get();
      for (auto& [key, bucket] : m) {
        auto [it, fresh] = global.try_emplace(key, std::move(bucket));
        if (!fresh) it->second.merge(std::move(bucket));
      }
    }
  }

  std::optional<std::pair<Slot, Slot>> best;
  for (const auto& [key, bucket] : global) {
    auto cand = bucket.candidate();
    if (!cand) continue;
    if (!best || std::pair(cand->first.pos, cand->second.pos) <
                     std::pair(best->first.pos, best->second.pos))
      best = std::move(cand);
  }
  return best;
}

inline void append_element(std::string& key, std::uint32_t v) {
  key.push_back(static_cast<char>(v & 0xff));
  key.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace detail
}  // namespace sepsym

#endif
