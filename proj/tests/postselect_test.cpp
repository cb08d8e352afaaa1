// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "photonsim/errors.hpp"
#include "photonsim/postselect.hpp"
#include "photonsim/qubit.hpp"
#include "photonsim/state_string.hpp"

namespace photonsim {
namespace {

const char* kRalphCondition = "[0,1]==1 & [2,3]==1 & [4]==0 & [5]==0";

std::size_t offset_of(std::string_view text) {
  try {
    parse_postselect(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for " << text;
  return std::string::npos;
}

TEST(ParsePostSelect, Clauses) {
  PostSelect p = parse_postselect("[0,1]==1 & [4]==0");
  ASSERT_EQ(p.clauses.size(), 2u);
  EXPECT_EQ(p.clauses[0].modes, (std::vector<int>{0, 1}));
  EXPECT_EQ(p.clauses[0].op, Comparator::Eq);
  EXPECT_EQ(p.clauses[0].value, 1);
  EXPECT_EQ(p.clauses[1].modes, (std::vector<int>{4}));

  PostSelect h = parse_postselect("[4]==1 & [5]==1");
  EXPECT_EQ(to_string(h), "[4]==1 & [5]==1");

  PostSelect ops = parse_postselect("[0]<1&[1]>0&[2]<=3&[3]>=2");
  EXPECT_EQ(ops.clauses[0].op, Comparator::Lt);
  EXPECT_EQ(ops.clauses[1].op, Comparator::Gt);
  EXPECT_EQ(ops.clauses[2].op, Comparator::Le);
  EXPECT_EQ(ops.clauses[3].op, Comparator::Ge);
}

TEST(ParsePostSelect, ErrorOffsets) {
  EXPECT_EQ(offset_of("[0,1==1"), 4u);
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("[]==1"), 1u);
  EXPECT_EQ(offset_of("[0]=1"), 4u);
  EXPECT_EQ(offset_of("[0]==1 &"), 8u);
  EXPECT_EQ(offset_of("[0]==1 [1]==0"), 7u);
  EXPECT_EQ(offset_of("[4,5] & [0]==1"), 6u);
  EXPECT_EQ(offset_of("[0]==x"), 5u);
}

TEST(ParsePostSelect, RoundTripOverCorpus) {
  const char* corpus[] = {kRalphCondition, "[0,1]==1 & [4]==0", "[4]==1 & [5]==1",
                          "[0,1]==1&[2,3]==1", "  [ 6 ] == 1 & [7]==0 ", "[0]>=1 & [1,2,3]<2"};
  for (const char* text : corpus) {
    PostSelect once = parse_postselect(text);
    const std::string printed = to_string(once);
    EXPECT_EQ(parse_postselect(printed), once) << text;
    EXPECT_EQ(to_string(parse_postselect(printed)), printed) << text;
  }
  EXPECT_EQ(to_string(parse_postselect(kRalphCondition)), kRalphCondition);
}

TEST(Evaluate, Examples) {
  PostSelect p = parse_postselect("[0,1]==1");
  EXPECT_TRUE(evaluate(p, parse_state("|0,1,1,0,0,0>")));
  EXPECT_FALSE(evaluate(p, parse_state("|1,1,0,0,0,0>")));
  PostSelect ralph = parse_postselect(kRalphCondition);
  EXPECT_TRUE(evaluate(ralph, parse_state("|0,1,1,0,0,0>")));
  EXPECT_FALSE(evaluate(ralph, parse_state("|1,1,0,0,1,0>")));
  EXPECT_THROW(evaluate(parse_postselect("[6]==0"), parse_state("|0,1,1,0,0,0>")), EvalError);
}

TEST(Evaluate, PolarizedModesSumChannels) {
  PostSelect p = parse_postselect("[0]==2");
  EXPECT_TRUE(evaluate(p, parse_state("|1:H+1:V,0>")));
}

TEST(Processor, RejectsMismatchedInput) {
  EXPECT_THROW(Processor(Circuit(4), StateVector(parse_state("|1,0,0>"))), RegisterMismatch);
}

TEST(Run, RalphListing) {
  GateBuild g = ralph_cnot(0, 1, 2);
  Processor p(g.circuit, StateVector(parse_state("|0,1,0,1,0,0>")),
              parse_postselect(kRalphCondition));
  RunResult r = run(p);
  EXPECT_NEAR(r.success_probability, 1.0 / 9.0, 1e-12);
  ASSERT_EQ(r.conditioned.size(), 1u);
  EXPECT_EQ(r.conditioned.begin()->first, parse_state("|0,1,1,0,0,0>"));
  EXPECT_NEAR(r.conditioned.begin()->second, 1.0, 1e-12);
}

TEST(Run, HeraldedCnot) {
  GateBuild g = heralded_cnot(0, 1, 2);
  Processor p(g.circuit, StateVector(parse_state("|0,1,0,1,1,1>")),
              parse_postselect("[4]==1 & [5]==1"));
  EXPECT_NEAR(run(p).success_probability, 2.0 / 27.0, 1e-12);
}

TEST(Run, NoPredicateKeepsEverything) {
  Circuit c = Circuit(3).add(0, BeamSplitterSpec<>{}).add(1, BeamSplitterSpec<>{});
  StateVector in(parse_state("|1,1,0>"));
  RunResult r = run(Processor(c, in));
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  const Distribution raw = distribution(c, in);
  ASSERT_EQ(r.conditioned.size(), raw.size());
  for (const auto& [s, p] : raw) EXPECT_NEAR(r.conditioned.at(s), p, 1e-12);
}

TEST(Run, PrunedSearchMatchesFilteredDistribution) {
  GateBuild g = heralded_cnot(0, 1, 2);
  const StateVector in(g.input({1, 0}));
  const PostSelect cond = parse_postselect("[4]==1 & [5]>=1 & [0,1,2,3]<=2");
  RunResult r = run(Processor(g.circuit, in, cond, 1));
  double kept = 0.0;
  for (const auto& [s, p] : distribution(g.circuit, in)) {
    if (evaluate(cond, s)) {
      kept += p;
      EXPECT_NEAR(r.conditioned.count(s) ? r.conditioned.at(s) * r.success_probability : 0.0, p,
                  1e-12);
    }
  }
  EXPECT_NEAR(r.success_probability, kept, 1e-12);
}

TEST(Run, MinDetectedPhotons) {
  RunResult r = run(Processor(Circuit(2), StateVector(parse_state("|1,0>")), std::nullopt, 2));
  EXPECT_EQ(r.success_probability, 0.0);
  EXPECT_TRUE(r.conditioned.empty());
  EXPECT_TRUE(r.conditioned_state().empty());
}

TEST(Run, MixedSectorPropagates) {
  StateVector mixed(2, false);
  mixed.add(FockState({1, 0}), 0.6);
  mixed.add(FockState({1, 1}), 0.8);
  EXPECT_THROW(run(Processor(Circuit(2), mixed)), MixedSector);
}

TEST(Run, OutOfRangePredicate) {
  EXPECT_THROW(run(Processor(Circuit(2), StateVector(parse_state("|1,0>")),
                             parse_postselect("[2]==0"))),
               EvalError);
}

TEST(Run, SuccessInvariantUnderInClausePermutation) {
  // Swapping modes 0 and 1 after the gate only permutes within the [0,1] clause.
  GateBuild g = ralph_cnot(0, 1, 2);
  PostSelect cond = parse_postselect(kRalphCondition);
  Circuit swapped = g.circuit.add(0, PermutationSpec{{1, 0}});
  for (int bits = 0; bits < 4; ++bits) {
    StateVector in(g.input({bits >> 1, bits & 1}));
    const double a = run(Processor(g.circuit, in, cond)).success_probability;
    const double b = run(Processor(swapped, in, cond)).success_probability;
    EXPECT_NEAR(a, b, 1e-12) << bits;
    // Swapping two ancilla modes mirrored in the predicate gives the same result.
    Circuit aux_swap = g.circuit.add(4, PermutationSpec{{1, 0}});
    EXPECT_NEAR(run(Processor(aux_swap, in, parse_postselect("[0,1]==1 & [2,3]==1 & [5]==0 & [4]==0")))
                    .success_probability,
                a, 1e-12);
  }
}

TEST(Conjunction, Combines) {
  PostSelect p = parse_postselect("[0]==1") & parse_postselect("[1]==0");
  EXPECT_EQ(to_string(p), "[0]==1 & [1]==0");
}

}  // namespace
}  // namespace photonsim
