// Copyright 2026 The ordgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ordgame/audit.hpp"

#include <gtest/gtest.h>

#include "ordgame/report.hpp"

namespace ordgame {
namespace {

const AuditReport& default_report() {
  static const AuditReport r = run_audit({true, 1});
  return r;
}

const ClaimResult& claim(const std::string& id) {
  for (const auto& c : default_report().claims) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("missing " + id);
}

TEST(Registry, NineClaimsInOrder) {
  const auto& reg = claim_registry();
  ASSERT_EQ(reg.size(), 9u);
  for (std::size_t i = 0; i < reg.size(); ++i) EXPECT_EQ(reg[i].id, "C" + std::to_string(i + 1));
  try {
    find_claim("C10");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
  }
}

TEST(Audit, DocumentedStatuses) {
  const auto& r = default_report();
  ASSERT_EQ(r.claims.size(), 9u);
  for (const auto& c : r.claims) EXPECT_TRUE(c.matches_expected()) << c.id << " " << to_string(c.status);
  EXPECT_EQ(claim("C1").status, ClaimStatus::HoldsConditionally);
  EXPECT_EQ(claim("C2").status, ClaimStatus::FailsWithCounterexample);
  EXPECT_EQ(claim("C3").status, ClaimStatus::FailsWithCounterexample);
  EXPECT_TRUE(claim("C3").partial);
  EXPECT_EQ(claim("C4").status, ClaimStatus::FailsWithCounterexample);
  EXPECT_EQ(claim("C5").status, ClaimStatus::HoldsForAll);
  EXPECT_EQ(claim("C6").status, ClaimStatus::FailsWithCounterexample);
  EXPECT_TRUE(claim("C6").partial);
  EXPECT_EQ(claim("C7").status, ClaimStatus::FailsWithCounterexample);
  EXPECT_EQ(claim("C8").status, ClaimStatus::TextualInconsistency);
  EXPECT_EQ(claim("C9").status, ClaimStatus::HoldsForAll);
}

TEST(Audit, ConditionForInstitutionFirstIeds) {
  const auto& p = claim("C1").parts.at(0);
  ASSERT_TRUE(p.condition.has_value());
  EXPECT_EQ(p.condition->lhs, Term(std::string("alpha_p")));
  EXPECT_EQ(p.condition->rel, Relation::Greater);
  EXPECT_EQ(p.condition->rhs, Term(Rational(0)));
}

TEST(Audit, COaPartFailsWithPublisherDeviation) {
  const auto& parts = claim("C3").parts;
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].status, ClaimStatus::HoldsConditionally);
  EXPECT_EQ(parts[1].status, ClaimStatus::FailsWithCounterexample);
  EXPECT_NE(parts[1].explanation.find("publisher deviates from OA to H"), std::string::npos) << parts[1].explanation;
}

TEST(Audit, CounterexamplesReverify) {
  const auto cs = default_constraints(true);
  int failing = 0;
  for (const auto& c : default_report().claims) {
    if (c.kind == ClaimKind::Textual) continue;
    const auto& reg = find_claim(c.id);
    ASSERT_EQ(reg.parts.size(), c.parts.size());
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      const auto& p = c.parts[i];
      if (p.status != ClaimStatus::FailsWithCounterexample) continue;
      ++failing;
      ASSERT_TRUE(p.counterexample.has_value()) << c.id;
      EXPECT_TRUE(satisfies(cs, *p.counterexample)) << c.id;
      EXPECT_TRUE(reproduces_failure(reg.parts[i], *p.counterexample)) << c.id << " part " << i;
    }
  }
  EXPECT_GE(failing, 6);
}

TEST(Audit, DeterministicAcrossThreadCounts) {
  const auto base = report::audit_document(default_report()).dump();
  for (std::size_t threads : {2u, 3u, 8u}) {
    EXPECT_EQ(report::audit_document(run_audit({true, threads})).dump(), base) << threads;
  }
}

TEST(Audit, NonnegativityOffStillClassifiesEveryClaim) {
  const auto r = run_audit({false, 1});
  ASSERT_EQ(r.claims.size(), 9u);
  EXPECT_FALSE(r.nonnegativity);
  for (const auto& c : r.claims) {
    if (c.kind == ClaimKind::Textual) {
      EXPECT_EQ(c.status, ClaimStatus::TextualInconsistency);
    }
  }
}

TEST(Repair, CoaRepairSwapsBetaPrimes) {
  const auto r = repair_search("C3", default_constraints(true), 1);
  ASSERT_EQ(r.kind, RepairKind::Repaired);
  bool swap = false;
  for (const auto& rep : r.repairs) {
    ASSERT_EQ(rep.edits.size(), 1u);
    if (const auto* s = std::get_if<SwapAdjacent>(&rep.edits[0])) {
      swap = swap || (s->upper == "beta_ppp" && s->lower == "beta_pp");
    }
  }
  EXPECT_TRUE(swap);
}

TEST(Repair, KindsForSpecialClaims) {
  const auto cs = default_constraints(true);
  const auto c5 = repair_search("C5", cs);
  EXPECT_EQ(c5.kind, RepairKind::AlreadyHolds);
  EXPECT_TRUE(c5.repairs.empty());
  EXPECT_EQ(repair_search("C8", cs).kind, RepairKind::UnrepairableTextual);
  EXPECT_EQ(repair_search("C7", cs).kind, RepairKind::NotOrdinal);
  EXPECT_THROW(repair_search("C3", cs, 4), Error);
  EXPECT_THROW(repair_search("X1", cs), Error);
}

TEST(RepairProperty, EveryRepairValidatesAndHolds) {
  for (bool nonneg : {true, false}) {
    const auto cs = default_constraints(nonneg);
    for (const auto& c : claim_registry()) {
      const auto r = repair_search(c.id, cs, 1);
      for (const auto& rep : r.repairs) {
        EXPECT_TRUE(validate(rep.constraints).ok) << c.id;
        EXPECT_TRUE(claim_holds_for_all(c, rep.constraints)) << c.id;
        auto replay = cs;
        for (const auto& e : rep.edits) replay = apply_edit(replay, e);
        EXPECT_EQ(replay, rep.constraints);
      }
    }
  }
}

}  // namespace
}  // namespace ordgame
