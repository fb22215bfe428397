#pragma once

// Persistent tau cache: a versioned text file of (k,m,n) -> P (x) P
// representative, entries sorted by key.
//
//   qinst-tau-cache
//   version: 1
//   engine: <basis and recursion conventions>
//   entries: <count>
//   entry r[k,m,n] <term count>
//   <laurent> | <left monomial> | <right monomial>
//   ...
//   end
//
// Writes replace the file atomically (temporary file + rename); readers and
// writers serialize on an advisory lock held on `<path>.lock`.

#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qinst/galois.hpp"

namespace qinst::cache {

using Entries = std::map<cmod::CIndex, galois::PPElement>;

inline constexpr std::string_view kMagic = "qinst-tau-cache";
inline constexpr int kVersion = 1;
/// Conventions an entry depends on; a file recorded under other conventions is rejected.
std::string engine_parameters();

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize(const Entries& entries);
/// Throws CacheError on a bad magic string, version or engine mismatch, or
/// malformed content (with the offending line number).
Entries deserialize(std::string_view text);

struct LoadResult {
  Entries entries;
  /// Keys dropped because chi(tau) != 1 (x) r failed (verification mode only).
  std::vector<cmod::CIndex> rejected;
};

/// A missing file loads as empty.
LoadResult load(const std::filesystem::path& path, const galois::GaloisEngine* verify_with = nullptr);
void save(const std::filesystem::path& path, const Entries& entries);
/// Load, let `edit` modify the entries, and write back, all under one
/// exclusive lock. Returns the load result seen by `edit`.
LoadResult update(const std::filesystem::path& path, const std::function<void(Entries&)>& edit,
                  const galois::GaloisEngine* verify_with = nullptr);

/// Default path from $QINST_TAU_CACHE, empty when unset.
std::filesystem::path default_path();

/// Entries -> table (first write wins), and table -> entries.
void fill(galois::TauTable& table, const Entries& entries);
Entries collect(const galois::TauTable& table);

}  // namespace qinst::cache
