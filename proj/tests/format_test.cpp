#include "support.hpp"
#include "tperm/format.hpp"
#include "tperm_check/generators.hpp"

namespace tperm {
namespace {

using testing::raises;

TEST(FormatPerm, Canonical) {
  EXPECT_EQ(format_perm(make_finitary(1, -1, {1, -1, 0, -2})), "fin chi=1 lo=-1 v=[1,-1,0,-2]");
  EXPECT_EQ(format_perm(make_affine(2, {0, 3})), "affine k=2 w=[0,3]");
  EXPECT_EQ(format_perm(identity(0)), "id@0");
  EXPECT_EQ(format_perm(identity(3)), "id@3");
  EXPECT_EQ(format_perm(iota(3, 0)), "iota3@0");
  EXPECT_EQ(format_perm(iota(-2, 4)), "iota-2@4");
  EXPECT_EQ(format_perm(sigma(-1, 0)), "s-1@0");
  EXPECT_EQ(format_perm(sigma(-1, 3)), "s2@3");
  EXPECT_EQ(format_perm(make_affine(2, {1, 0})), "s0@2");
}

TEST(ParsePerm, FormsAndWhitespace) {
  EXPECT_EQ(parse_perm("affine k=2 w=[0,3]"), make_affine(2, {0, 3}));
  EXPECT_EQ(parse_perm("  affine  k = 2   w = [ 0 , 3 ] "), make_affine(2, {0, 3}));
  EXPECT_EQ(parse_perm("fin chi=1 lo=-1 v=[1,-1,0,-2]"), make_finitary(1, -1, {1, -1, 0, -2}));
  EXPECT_EQ(parse_perm("fin chi=2 lo=0 v=[]"), iota(2, 0));
  EXPECT_EQ(parse_perm("id@2"), identity(2));
  EXPECT_EQ(parse_perm("iota-3@0"), iota(-3, 0));
  EXPECT_EQ(parse_perm("s 4 @ 3"), sigma(1, 3));
}

TEST(ParsePerm, Malformed) {
  for (const char* bad : {"", "affine", "affine k=2 w=[0,", "affine k=2 w=[0,3] x", "fin chi=a lo=0 v=[]",
                          "perm 3", "s@2", "iota3", "affine k=-2 w=[]", "{\"period\":2}",
                          "affine k=2 w=[0,99999999999999999999]"}) {
    EXPECT_THROW(parse_perm_any(bad), ParseError) << bad;
  }
  EXPECT_TRUE(raises(ErrorKind::DuplicateResidue, [] { parse_perm("affine k=2 w=[0,2]"); }));
  EXPECT_TRUE(raises(ErrorKind::BadPeriod, [] { parse_perm("id@1"); }));
}

TEST(Json, Mirror) {
  EXPECT_EQ(perm_to_json(make_affine(2, {0, 3})).dump(), R"({"period":2,"window":[0,3]})");
  EXPECT_EQ(perm_to_json(make_finitary(1, -1, {1, -1, 0, -2})).dump(),
            R"({"chi":1,"lo":-1,"period":0,"vals":[1,-1,0,-2]})");
  EXPECT_EQ(parse_perm_any(R"({"period":0,"chi":2,"lo":0,"vals":[]})"), iota(2, 0));
  EXPECT_THROW(parse_perm_any(R"({"period":0,"chi":2,"lo":0})"), ParseError);
  EXPECT_THROW(parse_perm_any(R"({"period":"2","window":[1,0]})"), ParseError);
}

TEST(RoundTrip, Corpus) {
  for (const Perm& p : check::corpus()) {
    const std::string text = format_perm(p);
    ASSERT_EQ(parse_perm(text), p) << text;
    ASSERT_EQ(format_perm(parse_perm(text)), text);
    ASSERT_EQ(perm_from_json(perm_to_json(p)), p) << text;
    ASSERT_EQ(parse_perm_any(perm_to_json(p).dump()), p) << text;
  }
}

TEST(Words, Format) {
  const Word hecke{2, {0, std::nullopt, 1}, WordFlavor::Hecke};
  EXPECT_EQ(format_word(hecke), "word k=2 [0,_,1]");
  EXPECT_EQ(parse_word("word k=2 [0, _ ,1]"), hecke);
  const Word reduced{0, {-1, 3}, WordFlavor::Reduced};
  EXPECT_EQ(parse_word(format_word(reduced)), reduced);
  EXPECT_EQ(parse_word("word k=3 []"), (Word{3, {}, WordFlavor::Reduced}));
  EXPECT_THROW(parse_word("word k=2 [2]"), ParseError);
  EXPECT_THROW(parse_word("word k=2 [0,]"), ParseError);
}

TEST(Splitting, Format) {
  const SplittingType e({-2, 0, 0});
  EXPECT_EQ(format_splitting(e), "split k=3 e=[-2,0,0]");
  EXPECT_EQ(parse_splitting("split k=3 e=[-2, 0, 0]"), e);
  EXPECT_THROW(parse_splitting("split k=2 e=[-2,0,0]"), ParseError);
  EXPECT_TRUE(raises(ErrorKind::BadParameters, [] { parse_splitting("split k=2 e=[0,-2]"); }));
}

TEST(Chain, Format) {
  const ChainSpec c = make_chain(2, {torsion_bundle(2, 1, 1), generic_bundle(2, 1), torsion_bundle(2, 3, 0)});
  EXPECT_EQ(format_chain(c), "chain k=2 [d=1:T 1, d=1:G, d=3:T 0]");
  EXPECT_EQ(parse_chain("chain k=2 [d=1:T1,d=1:G,d=3:T 2]"), c);
  EXPECT_EQ(parse_chain(format_chain(c)), c);
  EXPECT_THROW(parse_chain("chain k=2 [d=1:X]"), ParseError);
  EXPECT_TRUE(raises(ErrorKind::EmptySequence, [] { parse_chain("chain k=2 []"); }));
}

}  // namespace
}  // namespace tperm
