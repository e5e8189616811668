#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frag/error.hpp"

namespace frag {

// One raw /proc/kpageflags word: 64 flag bits per 4 KiB page frame.
using PageFlags = uint64_t;

enum class PageUsage : uint8_t {
  Free = 0,
  Anon,
  AnonHuge,
  FileCache,
  Pinned,
  Slab,
  Other,
};
inline constexpr size_t kUsageCount = 7;

// kpageflags bit positions (stable kernel ABI). Only these nine bits take
// part in classification; compound head/tail bits are deliberately ignored
// because contiguity is recovered by region segmentation, not page metadata.
namespace kpf {
inline constexpr int kLru = 5;
inline constexpr int kSlab = 7;
inline constexpr int kBuddy = 10;
inline constexpr int kAnon = 12;
inline constexpr int kHwPoison = 19;
inline constexpr int kNoPage = 20;
inline constexpr int kThp = 22;
inline constexpr int kOffline = 23;
inline constexpr int kZeroPage = 24;
}  // namespace kpf

struct SnapshotMeta {
  std::string machine;
  std::optional<int64_t> timestamp;  // seconds since epoch
};

// Per-page usage over a physical address space. Immutable after
// construction; safe to share between threads.
struct Snapshot {
  std::vector<PageUsage> pages;
  uint32_t page_size_bytes = 4096;
  SnapshotMeta meta;
};

// Flag-word classification, first matching rule wins:
//
//   1. NOPAGE, HWPOISON, ZERO_PAGE or OFFLINE  -> Other
//   2. BUDDY                                   -> Free
//   3. SLAB                                    -> Slab
//   4. ANON and THP                            -> AnonHuge
//   5. ANON                                    -> Anon
//   6. LRU                                     -> FileCache
//   7. otherwise                               -> Pinned
//
// The kernel does not define a canonical flags-to-usage mapping; this table
// is this project's contract (see README). Free outranks the type bits
// because a freed page is free no matter what it held before.
PageUsage classify_page(PageFlags flags) noexcept;

// Raw little-endian kpageflags dump -> snapshot, one page per 8-byte word.
Snapshot parse_kpageflags(std::span<const std::byte> raw,
                          uint32_t page_size_bytes = 4096);

// Portable text fixture format: one page per character, F=Free A=Anon
// H=AnonHuge C=FileCache P=Pinned S=Slab O=Other, whitespace ignored.
Snapshot load_usage_map(std::string_view text);
std::string write_usage_map(const Snapshot& snapshot);

char usage_to_char(PageUsage u) noexcept;
std::optional<PageUsage> usage_from_char(char c) noexcept;

// Lowercase names: "free", "anon", "anonhuge", "filecache", "pinned",
// "slab", "other". Used in reports and CLI flags.
const char* usage_name(PageUsage u) noexcept;
std::optional<PageUsage> usage_from_name(std::string_view name) noexcept;

}  // namespace frag
