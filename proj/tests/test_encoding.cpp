#include <gtest/gtest.h>

#include "qrook/encoding.hpp"
#include "qrook/psi.hpp"

using namespace qrook;

TEST(Encoding, InvolutionRoundTrip) {
  const std::string text = "(-3,4)(-2,7)(-1,2)(1,9)(3,8)(5)(6)(10)";
  const SignedInvolution a = parse_involution(text);
  EXPECT_EQ(a.negatives(), 3);
  EXPECT_EQ(a.half_positive(), 5);
  EXPECT_EQ(a(-3), 4);
  EXPECT_EQ(a(9), 1);
  EXPECT_EQ(format_involution(a), text);
  EXPECT_EQ(format_involution(parse_involution(" (2,-1) (1)  ")), "(-1,2)(1)");
  EXPECT_EQ(format_involution(parse_involution("")), "");
}

TEST(Encoding, InvolutionRejects) {
  EXPECT_THROW(parse_involution("(1,2"), std::invalid_argument);
  EXPECT_THROW(parse_involution("(1,2)(2)"), std::invalid_argument);
  EXPECT_THROW(parse_involution("(1,2,3)"), std::invalid_argument);
  EXPECT_THROW(parse_involution("(1,3)"), std::invalid_argument);   // missing 2 and 4
  EXPECT_THROW(parse_involution("(-2,1)(2)"), std::invalid_argument);  // missing -1
  EXPECT_THROW(parse_involution("(0)"), std::invalid_argument);
  EXPECT_THROW(parse_involution("(a)"), std::invalid_argument);
}

TEST(Encoding, Matching) {
  const PerfectMatching m = parse_matching("(2,4)(1,3)");
  EXPECT_EQ(format_matching(m), "(1,3)(2,4)");
  EXPECT_THROW(parse_matching("(1)(2,3)"), std::invalid_argument);
  EXPECT_THROW(parse_matching("(1,5)(2,3)"), std::invalid_argument);
}

TEST(Encoding, Path) {
  const LabeledPath p = parse_path("D[-1]D[-3]UUD[-2]U");
  ASSERT_EQ(p.size(), 6U);
  EXPECT_EQ(p[1], Step::Down(-3));
  EXPECT_EQ(format_path(p), "D[-1]D[-3]UUD[-2]U");
  EXPECT_EQ(format_path(parse_path("UDUD")), "UDUD");
  EXPECT_THROW(parse_path("UX"), std::invalid_argument);
  EXPECT_THROW(parse_path("D[1]"), std::invalid_argument);
  EXPECT_THROW(parse_path("D[-1]D[-1]"), std::invalid_argument);
  EXPECT_THROW(parse_path("D[-1"), std::invalid_argument);
}

TEST(Encoding, BoardAndPlacement) {
  const YoungBoard b = parse_board("s=3;mu=4,4,7,7");
  EXPECT_EQ(b.s, 3);
  EXPECT_EQ(b.mu, (std::vector<int>{4, 4, 7, 7}));
  EXPECT_EQ(format_board(b), "s=3;mu=4,4,7,7");
  EXPECT_EQ(format_board(parse_board("s=2;mu=")), "s=2;mu=");
  EXPECT_THROW(parse_board("s=3;mu=2,4"), std::invalid_argument);
  EXPECT_THROW(parse_board("mu=4;s=3"), std::invalid_argument);

  const RookPlacement p = parse_placement("s=3;mu=4,4,7,7;rooks=2,3,5,7");
  EXPECT_EQ(p.rook_column, (std::vector<int>{2, 3, 5, 7}));
  EXPECT_EQ(format_placement(p), "s=3;mu=4,4,7,7;rooks=2,3,5,7");
  EXPECT_THROW(parse_placement("s=3;mu=4,4,7,7;rooks=2,2,5,7"), std::invalid_argument);
  EXPECT_THROW(parse_placement("s=3;mu=4,4,7,7;rooks=5,2,3,7"), std::invalid_argument);
  EXPECT_THROW(parse_placement("s=3;mu=4,4,7,7;rooks=1,2"), std::invalid_argument);
}

TEST(Encoding, Subset) {
  const Subset s = parse_subset("n=4;subset=2,3");
  EXPECT_EQ(s.ground_n, 4);
  EXPECT_EQ(s.elements, (std::vector<int>{2, 3}));
  EXPECT_EQ(format_subset(s), "n=4;subset=2,3");
  EXPECT_THROW(parse_subset("n=4;subset=5"), std::invalid_argument);
  EXPECT_THROW(parse_subset("n=4;subset=1,1"), std::invalid_argument);
}

TEST(Encoding, Tree) {
  const PlaneTree t = parse_tree("(()(()))");
  EXPECT_EQ(t.children, (std::vector<std::vector<int>>{{1, 2}, {}, {3}, {}}));
  EXPECT_EQ(format_tree(t), "(()(()))");
  EXPECT_THROW(parse_tree("(()"), std::invalid_argument);
  EXPECT_THROW(parse_tree("()()"), std::invalid_argument);
  EXPECT_THROW(parse_tree(""), std::invalid_argument);
}

TEST(Encoding, MapRoundTrip) {
  const TreeRootedMap m = psi(parse_involution("(-3,4)(-2,7)(-1,2)(1,9)(3,8)(5)(6)(10)"));
  const std::string text = format_map(m);
  EXPECT_EQ(text,
            R"({"root":4,"vertices":[1,2,3,4],"rotation":{"1":[10],"2":[4,5,6],"3":[7,8,9],"4":[1,2,3]},)"
            R"("pairs":[[1,9],[2,4],[3,8],[5,7],[6,10]],"tree":[[2,4],[5,7],[6,10]]})");
  EXPECT_EQ(parse_map(text), m);
}

TEST(Encoding, MapRejects) {
  EXPECT_THROW(parse_map("not json"), std::invalid_argument);
  EXPECT_THROW(parse_map(R"({"root":1})"), std::invalid_argument);
  EXPECT_THROW(parse_map(R"({"root":1,"vertices":[1],"rotation":{"1":[1,2]},"pairs":[[1,3]],"tree":[]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_map(R"({"root":1,"vertices":[1],"rotation":{"1":[1,2]},"pairs":[[1,2]],"tree":[[1,1]]})"),
               std::invalid_argument);
}
