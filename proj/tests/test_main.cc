// Copyright 2026 The Ore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "division_audit.h"
#include "gtest/gtest.h"

namespace {

// Every skew division performed by any test is audited; a single broken
// division fails the run.
class DivisionAuditEnvironment : public ::testing::Environment {
 public:
  void SetUp() override { ore::oracle::DivisionAudit::Install(); }
  void TearDown() override {
    ore::oracle::DivisionAudit::Uninstall();
    std::cout << "[audit] skew divisions checked: " << ore::oracle::DivisionAudit::calls()
              << ", failures: " << ore::oracle::DivisionAudit::failures() << "\n";
    EXPECT_EQ(ore::oracle::DivisionAudit::failures(), 0u);
  }
};

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::AddGlobalTestEnvironment(new DivisionAuditEnvironment);
  return RUN_ALL_TESTS();
}
