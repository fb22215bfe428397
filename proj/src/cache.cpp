#include "qinst/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace qinst::cache {
namespace {

class FileLock {
 public:
  FileLock(const std::filesystem::path& cache_path, bool exclusive) {
    const std::string lock_path = cache_path.string() + ".lock";
    fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw CacheError("cannot open lock file " + lock_path + ": " + std::strerror(errno));
    while (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      if (errno != EINTR) {
        ::close(fd_);
        throw CacheError("cannot lock " + lock_path + ": " + std::strerror(errno));
      }
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) throw CacheError("cache file does not end with a newline");
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view text, std::size_t line) {
  std::size_t v = 0;
  if (text.empty()) throw CacheError("line " + std::to_string(line) + ": missing count");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw CacheError("line " + std::to_string(line) + ": malformed count");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

LoadResult load_impl(const std::filesystem::path& path, const galois::GaloisEngine* verify_with) {
  LoadResult result;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(path)) return result;
    throw CacheError("cannot read cache file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  Entries all = deserialize(buf.str());
  for (auto& [key, value] : all) {
    if (verify_with && verify_with->chi(value) != galois::unit_pc(key)) {
      result.rejected.push_back(key);
      continue;
    }
    result.entries.emplace(key, std::move(value));
  }
  return result;
}

void save_impl(const std::filesystem::path& path, const Entries& entries) {
  const std::string text = serialize(entries);
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw CacheError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw CacheError("cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace

std::string engine_parameters() {
  return "P=S7 z1<z2<z3<z4<z1*<z2*<z3*<z4* graded-revlex; C r[k,m,n]=a^k b^m c^n|b^m c^n d^-k; tau path k,m,n";
}

std::string serialize(const Entries& entries) {
  std::ostringstream out;
  out << kMagic << '\n' << "version: " << kVersion << '\n' << "engine: " << engine_parameters() << '\n'
      << "entries: " << entries.size() << '\n';
  for (const auto& [key, value] : entries) {
    out << "entry " << cmod::to_string(key) << ' ' << value.size() << '\n';
    for (const auto& [pp, c] : value)
      out << c.to_string() << " | " << s7::to_string(pp.left) << " | " << s7::to_string(pp.right) << '\n';
  }
  out << "end\n";
  return out.str();
}

Entries deserialize(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> CacheError {
    return CacheError("line " + std::to_string(i + 1) + ": " + why);
  };
  auto line = [&]() -> std::string_view {
    if (i >= lines.size()) throw CacheError("unexpected end of cache file");
    return lines[i];
  };
  auto header = [&](std::string_view prefix) {
    std::string_view l = line();
    if (l.substr(0, prefix.size()) != prefix) throw fail("expected '" + std::string(prefix) + "'");
    return l.substr(prefix.size());
  };

  if (line() != kMagic) throw fail("not a tau cache file (bad magic string)");
  ++i;
  const std::string_view version = header("version: ");
  if (version != std::to_string(kVersion))
    throw fail("cache version mismatch: file has " + std::string(version) + ", expected " + std::to_string(kVersion));
  ++i;
  if (header("engine: ") != engine_parameters()) throw fail("cache was written under different engine parameters");
  ++i;
  const std::size_t count = parse_count(header("entries: "), i + 1);
  ++i;

  Entries out;
  for (std::size_t e = 0; e < count; ++e) {
    std::string_view l = header("entry ");
    const std::size_t space = l.rfind(' ');
    if (space == std::string_view::npos) throw fail("malformed entry header");
    cmod::CIndex key;
    try {
      key = cmod::parse_index(l.substr(0, space));
    } catch (const std::invalid_argument& ex) {
      throw fail(ex.what());
    }
    if (!out.empty() && !(out.rbegin()->first < key)) throw fail("entries are not sorted by key");
    const std::size_t terms = parse_count(l.substr(space + 1), i + 1);
    ++i;
    galois::PPElement value;
    for (std::size_t t = 0; t < terms; ++t) {
      std::string_view body = line();
      const std::size_t a = body.find(" | ");
      const std::size_t b = a == std::string_view::npos ? a : body.find(" | ", a + 3);
      if (b == std::string_view::npos) throw fail("malformed term line");
      try {
        Laurent c = Laurent::parse(body.substr(0, a));
        if (c.is_zero()) throw fail("zero coefficient in term line");
        galois::PPKey pp{s7::parse_monomial(body.substr(a + 3, b - a - 3)), s7::parse_monomial(body.substr(b + 3))};
        if (!value.is_zero() && !(value.terms().rbegin()->first < pp)) throw fail("terms are not in basis order");
        value.add(pp, c);
      } catch (const std::invalid_argument& ex) {
        throw fail(ex.what());
      }
      ++i;
    }
    out.emplace(key, std::move(value));
  }
  if (line() != "end") throw fail("expected 'end'");
  ++i;
  if (i != lines.size()) throw fail("trailing content after 'end'");
  return out;
}

LoadResult load(const std::filesystem::path& path, const galois::GaloisEngine* verify_with) {
  FileLock lock(path, false);
  return load_impl(path, verify_with);
}

void save(const std::filesystem::path& path, const Entries& entries) {
  FileLock lock(path, true);
  save_impl(path, entries);
}

LoadResult update(const std::filesystem::path& path, const std::function<void(Entries&)>& edit,
                  const galois::GaloisEngine* verify_with) {
  FileLock lock(path, true);
  LoadResult loaded = load_impl(path, verify_with);
  Entries entries = loaded.entries;
  edit(entries);
  save_impl(path, entries);
  return loaded;
}

std::filesystem::path default_path() {
  const char* env = std::getenv("QINST_TAU_CACHE");
  return env ? std::filesystem::path(env) : std::filesystem::path();
}

void fill(galois::TauTable& table, const Entries& entries) {
  for (const auto& [key, value] : entries) table.insert(key, value);
}

Entries collect(const galois::TauTable& table) { return table.snapshot(); }

}  // namespace qinst::cache
