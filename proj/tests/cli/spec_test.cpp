#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qr/cli/commands.hpp"
#include "qr/cli/quandle_spec.hpp"
#include "qr/cli/reproduce.hpp"
#include "qr/errors.hpp"

using namespace qr;
using namespace qr::cli;

namespace {

int run_args(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "qr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

QuandleSpec random_spec(std::mt19937_64& rng, int depth) {
  QuandleSpec s;
  const int pick = static_cast<int>(rng() % (depth > 0 ? 8 : 7));
  const std::size_t n = 1 + rng() % 9;
  switch (pick) {
    case 0: s.kind = QuandleSpec::Kind::dihedral; s.n = n; break;
    case 1: s.kind = QuandleSpec::Kind::commutative; s.n = 2 * n + 1; break;
    case 2: s.kind = QuandleSpec::Kind::trivial; s.n = n; break;
    case 3: s.kind = QuandleSpec::Kind::x6; break;
    case 4: s.kind = QuandleSpec::Kind::core; s.n = n; break;
    case 5: s.kind = QuandleSpec::Kind::alexander; s.n = n; s.unit = static_cast<std::int64_t>(rng() % 7) - 3; break;
    case 6: s.kind = QuandleSpec::Kind::file; s.path = "tables/q" + std::to_string(n) + ".txt"; break;
    default:
      s.kind = QuandleSpec::Kind::product;
      s.factors = {random_spec(rng, depth - 1), random_spec(rng, depth - 1)};
      break;
  }
  return s;
}

}  // namespace

TEST(QuandleSpec, ParsesEachKind) {
  EXPECT_EQ(build_quandle(parse_quandle_spec("R:4")), dihedral_quandle(4));
  EXPECT_EQ(build_quandle(parse_quandle_spec("C:7")), commutative_quandle(7));
  EXPECT_EQ(build_quandle(parse_quandle_spec("T:3")), trivial_quandle(3));
  EXPECT_EQ(build_quandle(parse_quandle_spec("X6")), x6_quandle());
  EXPECT_EQ(build_quandle(parse_quandle_spec("core:Z5")), core_quandle(FiniteGroup::cyclic(5)));
  EXPECT_EQ(build_quandle(parse_quandle_spec("conj:Z4")), conjugation_quandle(FiniteGroup::cyclic(4)));
  EXPECT_EQ(build_quandle(parse_quandle_spec("alex:Z5:2")), affine_alexander_quandle(5, 2));
  EXPECT_EQ(build_quandle(parse_quandle_spec("prod:(R:3,prod:(T:1,C:3))")),
            product_quandle(dihedral_quandle(3), product_quandle(trivial_quandle(1), commutative_quandle(3))));
  EXPECT_EQ(build_quandle(parse_quandle_spec("alex:Z5:2")).label(), "alex:Z5:2");
}

TEST(QuandleSpec, CoreOfZ3IsR3) {
  EXPECT_EQ(build_quandle(parse_quandle_spec("core:Z3")), dihedral_quandle(3));
}

TEST(QuandleSpec, ReadsTableFiles) {
  const std::string path = ::testing::TempDir() + "r3_table.txt";
  {
    std::ofstream f(path);
    f << "# R3\n3\n0 2 1\n2 1 0\n1 0 2\n";
  }
  EXPECT_EQ(build_quandle(parse_quandle_spec("file:" + path)), dihedral_quandle(3));
}

TEST(QuandleSpec, RoundTripIsIdentity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const QuandleSpec s = random_spec(rng, 3);
    const std::string text = s.print();
    EXPECT_EQ(parse_quandle_spec(text), s) << text;
    EXPECT_EQ(parse_quandle_spec(text).print(), text);
  }
}

TEST(QuandleSpec, RejectsMalformedInput) {
  for (const char* bad : {"", "R", "R:", "R:0", "R:-3", "R:3x", "C:4", "Q:3", "core:5", "core:Z", "alex:Z5",
                          "alex:Z5:", "prod:(R:3)", "prod:(R:3,R:3,R:3)", "prod:R:3,R:3", "prod:((R:3,R:3)", "file:",
                          "X7"}) {
    try {
      parse_quandle_spec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::parse_error) << bad;
    }
  }
}

TEST(Dispatch, ExitCodes) {
  EXPECT_EQ(run_args({"props", "--quandle", "R:3"}), exit_ok);
  EXPECT_EQ(run_args({"props", "--quandle", "R:"}), exit_input_error);
  EXPECT_EQ(run_args({"props"}), exit_input_error);
  EXPECT_EQ(run_args({}), exit_input_error);
  EXPECT_EQ(run_args({"delta", "--quandle", "R:3", "--max-power", "0"}), exit_input_error);
  EXPECT_EQ(run_args({"corez", "--check", "nonsense"}), exit_input_error);
  EXPECT_EQ(run_args({"reproduce", "no-such-claim"}), exit_input_error);
  EXPECT_EQ(run_args({"reproduce", "prop4.8"}), exit_ok);
  EXPECT_EQ(run_args({"reproduce", "conjecture-2n1"}), exit_ok);
  EXPECT_EQ(run_args({"corez", "--check", "order", "--window", "5"}), exit_ok);
}

TEST(Dispatch, DeltaTableForR3) {
  std::string text;
  ASSERT_EQ(run_args({"delta", "--quandle", "R:3", "--max-power", "3"}, &text), exit_ok);
  EXPECT_NE(text.find("basis: [E1 + E2, 3E2]"), std::string::npos) << text;
  EXPECT_NE(text.find("basis: [3E1, 3E2]"), std::string::npos) << text;
}

TEST(Dispatch, TrivialQuandleProperties) {
  std::string text;
  ASSERT_EQ(run_args({"props", "--quandle", "T:2"}, &text), exit_ok);
  EXPECT_NE(text.find("latin: false"), std::string::npos);
  EXPECT_NE(text.find("connected: false"), std::string::npos);
}

TEST(Reproduce, ClaimIdsAreComplete) {
  EXPECT_EQ(claim_ids().size(), 19u);
  for (const char* id : {"prop4.8", "r4-powers", "r4-idem", "lemma-sqr", "r5-system", "c5-powers", "c7-powers",
                         "c5-idem-families", "prop-idx", "lemma-atq", "psi-example", "autx-decompose", "thm3.1",
                         "corez-commutator", "odd-order", "latin-center", "field-idem", "conjecture-2n1",
                         "c5-question"})
    EXPECT_TRUE(is_claim(id)) << id;
}

TEST(Reproduce, ConjecturesAreEvidenceOnly) {
  EXPECT_EQ(run_claim("conjecture-2n1").status, ClaimStatus::evidence_only);
  EXPECT_EQ(run_claim("c5-question").status, ClaimStatus::evidence_only);
}

TEST(Reproduce, ParallelRunKeepsOrderAndContent) {
  const auto ids = claim_ids();
  const auto serial = run_claims(ids, 1);
  const auto parallel = run_claims(ids, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, ids[i]);
    EXPECT_EQ(parallel[i].id, ids[i]);
    EXPECT_EQ(serial[i].status, parallel[i].status);
    EXPECT_EQ(serial[i].artifacts, parallel[i].artifacts);
  }
}
