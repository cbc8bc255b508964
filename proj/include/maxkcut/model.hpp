#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxkcut/graph.hpp"
#include "maxkcut/penalty.hpp"

namespace mkc {

using Bits = std::vector<std::uint8_t>;

enum class Encoding { one_hot, reduced };
enum class Sense { maximize, minimize };

std::string_view encoding_name(Encoding e);
std::optional<Encoding> parse_encoding(std::string_view name);

/// How model variables map onto (vertex, partition) pairs. Row-major by vertex:
///
///     one_hot:  var(v, j) = v * k       + j,   j in [0, k)
///     reduced:  var(v, j) = v * (k - 1) + j,   j in [0, k - 1)
///
/// with 0-based v and j. In the reduced layout the last partition (k - 1) has no
/// variable; an all-zero row selects it.
struct VariableLayout {
    Encoding encoding = Encoding::one_hot;
    int n = 0;
    int k = 0;

    int row_width() const noexcept { return encoding == Encoding::one_hot ? k : k - 1; }
    int num_vars() const noexcept { return n * row_width(); }
    int var(int v, int j) const noexcept { return v * row_width() + j; }
};

struct QuadTerm {
    int i = 0;  ///< i < j
    int j = 0;
    double coeff = 0.0;
};

/// Sparse quadratic form over binary variables:
///
///     f(x) = constant + sum_i linear[i] x_i + sum_{i<j} q_ij x_i x_j
///
/// Models produced by build_qubo / build_rqubo keep the layout and the graph
/// they came from so samples can be decoded and scored.
class QuboModel {
public:
    QuboModel() = default;

    /// Accumulates `quadratic` entries with the same unordered pair and drops
    /// zero coefficients. Throws on out-of-range or diagonal pairs.
    QuboModel(int num_vars, Sense sense, double constant, std::vector<double> linear, std::vector<QuadTerm> quadratic,
              std::optional<VariableLayout> layout = std::nullopt, std::shared_ptr<const Graph> source = nullptr);

    int num_vars() const noexcept { return num_vars_; }
    Sense sense() const noexcept { return sense_; }
    double constant() const noexcept { return constant_; }
    std::span<const double> linear() const noexcept { return linear_; }
    /// Sorted by (i, j), unique pairs.
    std::span<const QuadTerm> quadratic() const noexcept { return quadratic_; }
    const std::optional<VariableLayout>& layout() const noexcept { return layout_; }
    const Graph* source_graph() const noexcept { return source_.get(); }

    /// Largest absolute linear or quadratic coefficient.
    double max_abs_coeff() const noexcept;

    /// Same optimizers, opposite sense: every coefficient negated.
    QuboModel negated() const;

private:
    int num_vars_ = 0;
    Sense sense_ = Sense::maximize;
    double constant_ = 0.0;
    std::vector<double> linear_;
    std::vector<QuadTerm> quadratic_;
    std::optional<VariableLayout> layout_;
    std::shared_ptr<const Graph> source_;
};

/// One-hot model: sum_e w_uv (1 - sum_j x_uj x_vj) - sum_v c_v (sum_j x_vj - 1)^2.
QuboModel build_qubo(const Graph& g, int k, const PenaltyVector& c);

/// Reduced model over k-1 variables per vertex, the last partition implied by
/// an all-zero row, with pairwise penalty -c_v x_vi x_vj inside each row.
QuboModel build_rqubo(const Graph& g, int k, const PenaltyVector& c);

QuboModel build_model(const Graph& g, int k, const PenaltyVector& c, Encoding enc);

double evaluate(const QuboModel& model, std::span<const std::uint8_t> bits);

/// Vertex -> partition matrix in either encoding.
class Assignment {
public:
    Assignment(VariableLayout layout, Bits bits);

    /// From a partition vector (0-based partitions in [0, k)).
    static Assignment from_partitions(std::span<const int> partition, int k, Encoding enc);

    const VariableLayout& layout() const noexcept { return layout_; }
    Encoding encoding() const noexcept { return layout_.encoding; }
    int n() const noexcept { return layout_.n; }
    int k() const noexcept { return layout_.k; }
    const Bits& bits() const noexcept { return bits_; }

    std::span<const std::uint8_t> row(int v) const;
    int row_sum(int v) const;
    /// one_hot: every row sums to 1. reduced: every row sums to at most 1.
    bool feasible() const;
    bool row_feasible(int v) const;
    /// 0-based partition of v, nullopt when v's row is infeasible.
    std::optional<int> partition(int v) const;
    /// All partitions; throws when infeasible.
    std::vector<int> partitions() const;

private:
    VariableLayout layout_;
    Bits bits_;
};

Assignment decode(const VariableLayout& layout, std::span<const std::uint8_t> bits);

/// Reduced -> one-hot by filling the implied last column. Throws on infeasible input.
Assignment lift(const Assignment& reduced);

/// Weight of edges whose endpoints land in different partitions. Throws on
/// infeasible assignments.
double cut_weight(const Graph& g, const Assignment& a);
double cut_weight(const Graph& g, std::span<const int> partition);

/// "# vars=<N> sense=<max|min> constant=<c> encoding=<...> n=<n> k=<k>" then
/// "i i coeff" (linear) and "i j coeff" (quadratic, i<j) lines, 0-based.
std::string export_model(const QuboModel& model);

}  // namespace mkc
