#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "acs/cohomology.hpp"
#include "acs/error.hpp"
#include "acs/formats.hpp"
#include "oracles.hpp"

using namespace acs;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no acs::Error thrown";
  return ErrorKind::InvalidArgument;
}

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

GroupPtr parse_group(const std::string& text) {
  std::istringstream in(text);
  return read_group(in);
}

}  // namespace

TEST(GroupFormat, RoundTripBuiltins) {
  for (const char* spec : {"s3", "d4", "q8", "zn:6", "heis:3:2", "gl2:3"}) {
    const GroupPtr g = resolve_group(spec);
    std::ostringstream out;
    write_group(out, *g);
    const GroupPtr back = parse_group(out.str());
    EXPECT_TRUE(same_table(*g, *back)) << spec;
  }
}

TEST(GroupFormat, CommentsAndBlankLines) {
  const GroupPtr g = parse_group("# Z/2\n\ngroup c2 2\n0 1\n# middle\n1 0\n\n");
  EXPECT_EQ(g->order(), 2u);
  EXPECT_EQ(g->mul(1, 1), 0u);
}

TEST(GroupFormat, Errors) {
  EXPECT_EQ(kind_of([] { parse_group(""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_group("grp c2 2\n0 1\n1 0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_group("group c2 2\n0 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_group("group c2 2\n0 1\n1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_group("group c2 2\n0 1\n1 x\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_group("group c2 2\n0 1\n1 0\n0 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_group("group bad 2\n0 1\n1 1\n"); }), ErrorKind::NotAGroup);
  EXPECT_EQ(kind_of([] { parse_group("group big 513\n"); }), ErrorKind::OrderCapExceeded);
}

TEST(GroupSpec, Builtins) {
  EXPECT_EQ(resolve_group("s3")->order(), 6u);
  EXPECT_EQ(resolve_group("d4")->order(), 8u);
  EXPECT_EQ(resolve_group("q8")->order(), 8u);
  EXPECT_EQ(resolve_group("zn:12")->order(), 12u);
  EXPECT_EQ(resolve_group("heis:3:3")->order(), 27u);
  EXPECT_EQ(resolve_group("gl2:4")->order(), 180u);
  EXPECT_TRUE(resolve_split_group("s3"));
  EXPECT_TRUE(resolve_split_group("gl2:3"));
  EXPECT_FALSE(resolve_split_group("q8"));
  EXPECT_FALSE(resolve_split_group("zn:4"));
  EXPECT_EQ(kind_of([] { resolve_group("zn:0"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { resolve_group("zn:513"); }), ErrorKind::OrderCapExceeded);
  EXPECT_EQ(kind_of([] { resolve_group("/nonexistent/group.txt"); }), ErrorKind::InvalidArgument);
}

TEST(GroupSpec, FilePath) {
  const auto path = std::filesystem::temp_directory_path() / "acs_formats_test_group.txt";
  {
    std::ofstream f(path);
    write_group(f, *resolve_group("d4"));
  }
  EXPECT_TRUE(same_table(*resolve_group(path.string()), *resolve_group("d4")));
  std::filesystem::remove(path);
}

TEST(CochainFormat, RoundTrip) {
  std::mt19937_64 rng(5);
  for (const char* spec : {"s3", "q8", "zn:5"}) {
    const GroupPtr g = resolve_group(spec);
    for (unsigned k = 0; k <= 3; ++k) {
      const Cochain c = oracle::random_cochain(g, k, 4, rng);
      std::ostringstream out;
      write_cochain(out, c);
      std::istringstream in(out.str());
      EXPECT_EQ(read_cochain(in, g, k, 4), c) << spec << " " << k;
    }
  }
}

TEST(CochainFormat, Errors) {
  const GroupPtr g = cyclic_group(2);
  auto read = [&](const std::string& text, unsigned k, Residue n) {
    std::istringstream in(text);
    return read_cochain(in, g, k, n);
  };
  EXPECT_EQ(read("cochain c2 1 2\n0\n1\n", 1, 2), Cochain(g, 1, 2, {0, 1}));
  EXPECT_EQ(kind_of([&] { read("", 1, 2); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { read("cochain c2 1 2\n0\n", 1, 2); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { read("cochain c2 1 2\n0\n1\n1\n", 1, 2); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { read("cochain c2 1 2\n0\nq\n", 1, 2); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { read("cochain c2 2 2\n0\n1\n0\n0\n", 1, 2); }), ErrorKind::MismatchedContext);
  EXPECT_EQ(kind_of([&] { read("cochain c2 1 3\n0\n1\n", 1, 2); }), ErrorKind::MismatchedContext);
  EXPECT_EQ(kind_of([&] { read("cochain c2 1 2\n0\n2\n", 1, 2); }), ErrorKind::InvalidArgument);
}

TEST(CochainFormat, TwistClassSurvivesRoundTrip) {
  const auto split = resolve_split_group("s3");
  ASSERT_TRUE(split);
  const CohClass tw = twist_class(split->projection);
  std::ostringstream out;
  write_cochain(out, tw.rep());
  std::istringstream in(out.str());
  const Cochain back = read_cochain(in, split->group, 3, 2);
  EXPECT_TRUE(is_cocycle(back));
  EXPECT_EQ(back, tw.rep());
}
