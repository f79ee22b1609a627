// Copyright 2026 The gapr Authors
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

#ifndef GAPR_FEATURES_H_
#define GAPR_FEATURES_H_

#include <ostream>
#include <span>
#include <vector>

#include "gapr/plan.h"
#include "gapr/task_set.h"

namespace gapr {

// Dense column-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int r, int c) const { return data_[Index(r, c)]; }
  double& operator()(int r, int c) { return data_[Index(r, c)]; }
  std::span<const double> column(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * rows_,
            static_cast<std::size_t>(rows_)};
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(c) * rows_ + r;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// A_ij = g_{H_j}(s_i): one row per plan, one column per subset.
struct FeatureMatrix {
  DenseMatrix values;
  std::vector<TaskSet> columns;
};

FeatureMatrix BuildFeatures(std::span<const AssignmentPlan> plans,
                            std::span<const TaskSet> subsets);

// CSV with one header row of subset labels and integer entries.
void WriteFeatureCsv(const FeatureMatrix& a, std::ostream& out);

}  // namespace gapr

#endif  // GAPR_FEATURES_H_
