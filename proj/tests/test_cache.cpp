#include <gtest/gtest.h>

#include <unistd.h>

#include <fstream>
#include <sstream>
#include <thread>

#include "qinst/cache.hpp"

using namespace qinst;
using namespace qinst::cache;
namespace fs = std::filesystem;

namespace {

class CacheFile : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qinst-cache-test-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    path_ = dir_ / "tau.cache";
  }
  void TearDown() override { fs::remove_all(dir_); }

  static Entries sample(int degree) {
    galois::TauTable table;
    for (const auto& x : cmod::indices_up_to(degree)) galois::standard_engine().tau(x, table);
    return collect(table);
  }
  std::string read() const {
    std::ifstream in(path_, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  void write(const std::string& text) const {
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    out << text;
  }

  fs::path dir_;
  fs::path path_;
};

TEST_F(CacheFile, SerializationRoundTripIsByteIdentical) {
  const Entries e = sample(3);
  const std::string text = serialize(e);
  EXPECT_EQ(deserialize(text), e);
  EXPECT_EQ(serialize(deserialize(text)), text);
  EXPECT_EQ(text.rfind("qinst-tau-cache\nversion: 1\nengine: ", 0), 0u);
  EXPECT_EQ(text.substr(text.size() - 4), "end\n");
}

TEST_F(CacheFile, SaveLoadRoundTrip) {
  const Entries e = sample(2);
  save(path_, e);
  const std::string first = read();
  const LoadResult r = load(path_, &galois::standard_engine());
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_EQ(r.entries, e);
  save(path_, r.entries);
  EXPECT_EQ(read(), first);
}

TEST_F(CacheFile, MissingFileLoadsEmpty) { EXPECT_TRUE(load(path_).entries.empty()); }

TEST_F(CacheFile, VersionMismatchIsRejected) {
  std::string text = serialize(sample(1));
  text.replace(text.find("version: 1"), 10, "version: 2");
  try {
    deserialize(text);
    FAIL();
  } catch (const CacheError& e) {
    EXPECT_NE(std::string(e.what()).find("version mismatch"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST_F(CacheFile, CorruptionIsRejected) {
  const std::string good = serialize(sample(1));
  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    const auto at = t.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return t.replace(at, from.size(), to);
  };
  const std::vector<std::string> bad = {
      "",
      "not-a-cache\n",
      good.substr(0, good.size() - 1),
      good + "extra\n",
      mutate("engine: P=S7", "engine: P=S8"),
      mutate("entries: ", "entries: x"),
      mutate("entry r[0,0,0] 1", "entry r[0,0,0] 2"),
      mutate("entry r[0,0,0]", "entry r[0,-1,0]"),
      mutate("1 | 1 | 1", "1 | 1 |"),
      mutate("1 | 1 | 1", "1 | z4 z4* | 1"),
      mutate("1 | 1 | 1", "0 | 1 | 1"),
      mutate("\nend\n", "\n"),
  };
  for (const auto& text : bad) EXPECT_THROW(deserialize(text), CacheError) << text.substr(0, 80);
}

TEST_F(CacheFile, UnsortedEntriesAreRejected) {
  Entries e = sample(1);
  const std::string text = serialize(e);
  // swap the first two entry blocks
  const auto first = text.find("entry ");
  const auto second = text.find("entry ", first + 1);
  const auto third = text.find("entry ", second + 1);
  const std::string swapped = text.substr(0, first) + text.substr(second, third - second) +
                              text.substr(first, second - first) + text.substr(third);
  EXPECT_THROW(deserialize(swapped), CacheError);
}

TEST_F(CacheFile, TamperedEntriesAreRejectedOnVerifiedLoad) {
  Entries e = sample(1);
  e[cmod::CIndex{1, 0, 0}] = e[cmod::CIndex{-1, 0, 0}];
  save(path_, e);
  const LoadResult unchecked = load(path_);
  EXPECT_EQ(unchecked.entries.size(), e.size());
  const LoadResult checked = load(path_, &galois::standard_engine());
  ASSERT_EQ(checked.rejected.size(), 1u);
  EXPECT_EQ(checked.rejected[0], (cmod::CIndex{1, 0, 0}));
  EXPECT_EQ(checked.entries.size(), e.size() - 1);
}

TEST_F(CacheFile, FillIsFirstWriteWins) {
  galois::TauTable table;
  table.insert({0, 0, 0}, galois::PPElement{});
  fill(table, sample(1));
  auto v = *table.find({0, 0, 0});
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(table.size(), cmod::indices_up_to(1).size());
}

TEST_F(CacheFile, ConcurrentUpdatesAreSerialized) {
  const auto indices = cmod::indices_up_to(2);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < indices.size(); i += 4)
        update(path_, [&](Entries& e) {
          galois::TauTable t;
          e.emplace(indices[i], galois::standard_engine().tau(indices[i], t));
        });
    });
  for (auto& th : pool) th.join();
  const LoadResult r = load(path_, &galois::standard_engine());
  EXPECT_EQ(r.entries.size(), indices.size());
  EXPECT_TRUE(r.rejected.empty());
  for (const auto& entry : fs::directory_iterator(dir_))
    EXPECT_EQ(entry.path().string().find(".tmp."), std::string::npos) << entry.path();
}

TEST(CacheDefaultPath, ReadsEnvironment) {
  ::setenv("QINST_TAU_CACHE", "/tmp/somewhere.cache", 1);
  EXPECT_EQ(default_path(), fs::path("/tmp/somewhere.cache"));
  ::unsetenv("QINST_TAU_CACHE");
  EXPECT_TRUE(default_path().empty());
}

}  // namespace
