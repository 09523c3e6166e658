#include <gtest/gtest.h>

#include <map>
#include <set>

#include "azeta/corpus.hpp"
#include "azeta/errors.hpp"
#include "azeta/spec_file.hpp"
#include "azeta/verify.hpp"
#include "azeta/zeta_engine.hpp"

using namespace azeta;

namespace {

QuotientGroup from_text(const std::string& text) {
  QuotientSpecFile f = parse_spec(text);
  return QuotientGroup::build(RootSystem::get(f.group.root), f.group);
}

std::string parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kA2Torus = "root_system = A2\nkind = torus\nv1 = 1,1\nv2 = -1,2\n";
const char* kC2Torus = "root_system = C2\nkind = torus\nv1 = (1,1)\nv2 = (1,-1)\n";
const char* kA2Klein = "root_system = A2\nkind = klein\nalpha = 1,0\nbeta = 0,1\na = 1\nb = 1\nm = 1\n";

}  // namespace

TEST(SpecFile, ParsesBothKinds) {
  QuotientSpecFile t = parse_spec(std::string("# comment\n") + kA2Torus + "order = 30\n");
  EXPECT_EQ(t.group.root, RootKind::A2);
  EXPECT_FALSE(t.group.is_klein());
  EXPECT_EQ(std::get<TorusSpec>(t.group.data).v2, (LatticeVector{-1, 2}));
  EXPECT_EQ(t.order, 30);
  QuotientSpecFile k = parse_spec(kA2Klein);
  ASSERT_TRUE(k.group.is_klein());
  EXPECT_EQ(std::get<KleinSpec>(k.group.data).beta, (LatticeVector{0, 1}));
  EXPECT_FALSE(k.order.has_value());
}

TEST(SpecFile, RoundTrip) {
  QuotientSpecFile k = parse_spec(kA2Klein);
  QuotientSpecFile again = parse_spec(format_spec(k.group, 40));
  EXPECT_EQ(format_spec(again.group, again.order), format_spec(k.group, 40));
}

TEST(SpecFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error("root_system = A2\nkind = torus\nv1 = 1\nv2 = 1,1\n").rfind("line 3:", 0), 0u);
  EXPECT_EQ(parse_error("root_system = A2\nroot_system = A2\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(parse_error("root_system = A2\nkind = torus\nalpha = 1,0\n").rfind("line 3:", 0), 0u);
  EXPECT_EQ(parse_error("bogus line\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(parse_error("root_system = B2\n").rfind("line 1:", 0), 0u);
  EXPECT_THROW(parse_spec("root_system = A2\nkind = torus\nv1 = 1,1\n"), ValidationError);
  EXPECT_THROW(parse_spec(std::string(kA2Torus) + "order = 0\n"), ValidationError);
}

TEST(Verify, A2TorusAllHold) {
  VerificationReport r = verify(from_text(kA2Torus), std::nullopt);
  EXPECT_TRUE(r.all_hold());
  for (Rep p : {Rep::pi1, Rep::pi2})
    for (const char* id : {"walk-trace", "l-trace", "torus-closed-form", "walks-equal", "semi-vs-walks", "gallery-semi", "main-a2", "main-correction",
                           "bijectivity", "integrality", "galleries-census", "semi-census"}) {
      const IdentityRecord* rec = r.find(id, p);
      ASSERT_NE(rec, nullptr) << id;
      EXPECT_TRUE(rec->holds) << id;
    }
  EXPECT_EQ(r.find("klein-l-function", Rep::pi1), nullptr);
}

TEST(Verify, C2TorusMainIdentity) {
  VerificationReport r = verify(from_text(kC2Torus), std::nullopt);
  EXPECT_TRUE(r.all_hold());
  ASSERT_NE(r.find("main-c2-st", Rep::st), nullptr);
  ASSERT_NE(r.find("main-c2-spin", Rep::spin), nullptr);
  ASSERT_NE(r.find("parity-spin-walks", Rep::spin), nullptr);
}

TEST(Verify, A2KleinAllHold) {
  VerificationReport r = verify(from_text(kA2Klein), std::nullopt);
  for (const auto* f : r.failures()) ADD_FAILURE() << f->id << ": " << f->detail << " " << f->lhs << " vs " << f->rhs;
  for (const char* id : {"klein-l-function", "cover-square", "klein-difference", "semi-cover"})
    EXPECT_NE(r.find(id, Rep::pi1), nullptr) << id;
  EXPECT_NE(r.find("axis-parity"), nullptr);
  EXPECT_NE(r.find("glide-lattice-count"), nullptr);
}

TEST(Verify, OneRecordPerIdentity) {
  VerificationReport r = verify(from_text(kA2Klein), std::nullopt);
  std::set<std::pair<std::string, int>> seen;
  for (const auto& rec : r.records)
    EXPECT_TRUE(seen.insert({rec.id, rec.rep ? static_cast<int>(*rec.rep) : -1}).second) << rec.id;
}

TEST(Verify, InsufficientOrderIsReported) {
  QuotientGroup q = from_text(kA2Klein);
  try {
    verify(q, 10);
    FAIL() << "expected InsufficientOrderError";
  } catch (const InsufficientOrderError& e) {
    EXPECT_EQ(e.required(), required_order(q));
    EXPECT_NE(std::string(e.what()).find("raise order"), std::string::npos);
  }
}

TEST(Verify, Deterministic) {
  QuotientGroup q = from_text(kA2Klein);
  VerificationReport a = verify(q, std::nullopt), b = verify(q, std::nullopt);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].id, b.records[i].id);
    EXPECT_EQ(a.records[i].holds, b.records[i].holds);
  }
}

TEST(Corpus, CoversCellsAndIsSeeded) {
  CorpusOptions opt;
  auto a = generate_corpus(opt);
  auto b = generate_corpus(opt);
  ASSERT_EQ(a.size(), b.size());
  std::map<std::string, int> cells;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].spec.to_string(), b[i].spec.to_string());
    cells[a[i].cell]++;
  }
  EXPECT_EQ(cells["A2/torus"], 20);
  EXPECT_EQ(cells["C2/torus"], 20);
  for (const char* c : {"A2/b-even", "A2/b-odd", "C2-spin/b-even", "C2-spin/b-odd", "C2-st/b-even"})
    EXPECT_GE(cells[c], 1) << c;
  opt.seed = 2;
  auto c = generate_corpus(opt);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) differs |= a[i].spec.to_string() != c[i].spec.to_string();
  EXPECT_TRUE(differs);
}

TEST(Corpus, KleinSpecsRespectBounds) {
  CorpusOptions opt;
  for (RootKind k : {RootKind::A2, RootKind::C2})
    for (const auto& s : enumerate_klein_specs(k, opt)) {
      const auto& ks = std::get<KleinSpec>(s.data);
      EXPECT_LE(std::abs(ks.a), opt.klein_ab_bound);
      EXPECT_LE(std::abs(ks.b), opt.klein_ab_bound);
      EXPECT_NE(ks.m, 0);
      EXPECT_LE(QuotientGroup::build(RootSystem::get(k), s).N(), opt.max_N);
    }
}

TEST(Corpus, SmallRunVerifies) {
  CorpusOptions opt;
  opt.tori_per_root = 2;
  opt.kleins_per_cell = 1;
  auto results = verify_corpus(generate_corpus(opt), VerifyOptions{}, 2);
  for (const auto& r : results) EXPECT_TRUE(r.ok()) << r.entry.name << " " << r.error;
}
