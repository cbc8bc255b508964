#include "maxkcut/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "maxkcut/error.hpp"
#include "maxkcut/format.hpp"

namespace mkc {

std::string_view encoding_name(Encoding e) { return e == Encoding::one_hot ? "one_hot" : "reduced"; }

std::optional<Encoding> parse_encoding(std::string_view name) {
    if (name == "one_hot") return Encoding::one_hot;
    if (name == "reduced") return Encoding::reduced;
    return std::nullopt;
}

QuboModel::QuboModel(int num_vars, Sense sense, double constant, std::vector<double> linear,
                     std::vector<QuadTerm> quadratic, std::optional<VariableLayout> layout,
                     std::shared_ptr<const Graph> source)
    : num_vars_(num_vars), sense_(sense), constant_(constant), linear_(std::move(linear)), layout_(layout),
      source_(std::move(source)) {
    if (num_vars_ < 0) throw Error("variable count must be nonnegative");
    if (linear_.empty()) linear_.assign(num_vars_, 0.0);
    if (static_cast<int>(linear_.size()) != num_vars_) throw Error("linear term vector has the wrong length");
    if (layout_ && layout_->num_vars() != num_vars_) throw Error("variable layout does not match variable count");

    std::map<std::pair<int, int>, double> acc;
    for (auto t : quadratic) {
        if (t.i == t.j) throw Error("quadratic term on a single variable; fold it into the linear part");
        if (t.i < 0 || t.j < 0 || t.i >= num_vars_ || t.j >= num_vars_) throw Error("quadratic term index out of range");
        if (t.i > t.j) std::swap(t.i, t.j);
        acc[{t.i, t.j}] += t.coeff;
    }
    quadratic_.reserve(acc.size());
    for (const auto& [key, coeff] : acc)
        if (coeff != 0.0) quadratic_.push_back({key.first, key.second, coeff});
}

double QuboModel::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (double a : linear_) m = std::max(m, std::abs(a));
    for (const auto& t : quadratic_) m = std::max(m, std::abs(t.coeff));
    return m;
}

QuboModel QuboModel::negated() const {
    std::vector<double> lin(linear_.size());
    std::transform(linear_.begin(), linear_.end(), lin.begin(), [](double a) { return -a; });
    std::vector<QuadTerm> quad = quadratic_;
    for (auto& t : quad) t.coeff = -t.coeff;
    return QuboModel(num_vars_, sense_ == Sense::maximize ? Sense::minimize : Sense::maximize, -constant_, std::move(lin),
                     std::move(quad), layout_, source_);
}

namespace {

void check_inputs(const Graph& g, int k, const PenaltyVector& c) {
    if (k < 2) throw Error("k must be at least 2");
    if (static_cast<int>(c.size()) != g.num_vertices())
        throw Error("penalty vector has " + std::to_string(c.size()) + " entries, graph has " +
                    std::to_string(g.num_vertices()) + " vertices");
}

}  // namespace

QuboModel build_qubo(const Graph& g, int k, const PenaltyVector& c) {
    check_inputs(g, k, c);
    const VariableLayout layout{Encoding::one_hot, g.num_vertices(), k};
    const int n = layout.n;
    double constant = g.total_weight();
    std::vector<double> linear(layout.num_vars(), 0.0);
    std::vector<QuadTerm> quad;

    // -w_uv * sum_j x_uj x_vj
    for (const auto& e : g.edges())
        for (int j = 0; j < k; ++j) quad.push_back({layout.var(e.u, j), layout.var(e.v, j), -e.w});

    // -c_v (sum_j x_vj - 1)^2 = -c_v + c_v sum_j x_vj - 2 c_v sum_{i<j} x_vi x_vj
    for (int v = 0; v < n; ++v) {
        constant -= c[v];
        for (int i = 0; i < k; ++i) {
            linear[layout.var(v, i)] += c[v];
            for (int j = i + 1; j < k; ++j) quad.push_back({layout.var(v, i), layout.var(v, j), -2.0 * c[v]});
        }
    }
    return QuboModel(layout.num_vars(), Sense::maximize, constant, std::move(linear), std::move(quad), layout,
                     std::make_shared<const Graph>(g));
}

QuboModel build_rqubo(const Graph& g, int k, const PenaltyVector& c) {
    check_inputs(g, k, c);
    const VariableLayout layout{Encoding::reduced, g.num_vertices(), k};
    const int n = layout.n;
    const int r = layout.row_width();
    std::vector<double> linear(layout.num_vars(), 0.0);
    std::vector<QuadTerm> quad;

    // With s_v = sum_j x_vj the edge term expands to
    //   w [1 - sum_j x_uj x_vj - (1 - s_u)(1 - s_v)]
    //   = w [s_u + s_v - sum_j x_uj x_vj - sum_{i,j} x_ui x_vj],
    // so matched columns carry -2w and mismatched columns -w.
    for (const auto& e : g.edges()) {
        for (int j = 0; j < r; ++j) {
            linear[layout.var(e.u, j)] += e.w;
            linear[layout.var(e.v, j)] += e.w;
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) quad.push_back({layout.var(e.u, i), layout.var(e.v, j), i == j ? -2.0 * e.w : -e.w});
    }

    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) quad.push_back({layout.var(v, i), layout.var(v, j), -c[v]});

    return QuboModel(layout.num_vars(), Sense::maximize, 0.0, std::move(linear), std::move(quad), layout,
                     std::make_shared<const Graph>(g));
}

QuboModel build_model(const Graph& g, int k, const PenaltyVector& c, Encoding enc) {
    return enc == Encoding::one_hot ? build_qubo(g, k, c) : build_rqubo(g, k, c);
}

double evaluate(const QuboModel& model, std::span<const std::uint8_t> bits) {
    if (static_cast<int>(bits.size()) != model.num_vars())
        throw Error("bit vector has " + std::to_string(bits.size()) + " entries, model has " +
                    std::to_string(model.num_vars()) + " variables");
    double value = model.constant();
    const auto lin = model.linear();
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) value += lin[i];
    for (const auto& t : model.quadratic())
        if (bits[t.i] && bits[t.j]) value += t.coeff;
    return value;
}

Assignment::Assignment(VariableLayout layout, Bits bits) : layout_(layout), bits_(std::move(bits)) {
    if (layout_.k < 2 || layout_.n < 0) throw Error("invalid layout");
    if (static_cast<int>(bits_.size()) != layout_.num_vars()) throw Error("bit vector does not match the layout");
    for (auto& b : bits_) b = b ? 1 : 0;
}

Assignment Assignment::from_partitions(std::span<const int> partition, int k, Encoding enc) {
    const VariableLayout layout{enc, static_cast<int>(partition.size()), k};
    Bits bits(layout.num_vars(), 0);
    for (int v = 0; v < layout.n; ++v) {
        const int p = partition[v];
        if (p < 0 || p >= k) throw Error("partition index out of range");
        if (p < layout.row_width()) bits[layout.var(v, p)] = 1;
    }
    return Assignment(layout, std::move(bits));
}

std::span<const std::uint8_t> Assignment::row(int v) const {
    const auto w = static_cast<std::size_t>(layout_.row_width());
    return std::span<const std::uint8_t>(bits_).subspan(static_cast<std::size_t>(v) * w, w);
}

int Assignment::row_sum(int v) const {
    int s = 0;
    for (auto b : row(v)) s += b;
    return s;
}

bool Assignment::row_feasible(int v) const {
    const int s = row_sum(v);
    return layout_.encoding == Encoding::one_hot ? s == 1 : s <= 1;
}

bool Assignment::feasible() const {
    for (int v = 0; v < layout_.n; ++v)
        if (!row_feasible(v)) return false;
    return true;
}

std::optional<int> Assignment::partition(int v) const {
    if (!row_feasible(v)) return std::nullopt;
    const auto r = row(v);
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j]) return static_cast<int>(j);
    return layout_.k - 1;  // reduced, empty row
}

std::vector<int> Assignment::partitions() const {
    std::vector<int> out(layout_.n);
    for (int v = 0; v < layout_.n; ++v) {
        auto p = partition(v);
        if (!p) throw Error("assignment is infeasible at vertex " + std::to_string(v + 1));
        out[v] = *p;
    }
    return out;
}

Assignment decode(const VariableLayout& layout, std::span<const std::uint8_t> bits) {
    return Assignment(layout, Bits(bits.begin(), bits.end()));
}

Assignment lift(const Assignment& reduced) {
    if (reduced.encoding() != Encoding::reduced) throw Error("lift expects a reduced assignment");
    const int n = reduced.n();
    const int k = reduced.k();
    const VariableLayout out_layout{Encoding::one_hot, n, k};
    Bits bits(out_layout.num_vars(), 0);
    for (int v = 0; v < n; ++v) {
        const int s = reduced.row_sum(v);
        if (s > 1) throw Error("cannot lift: vertex " + std::to_string(v + 1) + " is assigned to " + std::to_string(s) + " partitions");
        const auto r = reduced.row(v);
        for (int j = 0; j < k - 1; ++j) bits[out_layout.var(v, j)] = r[j];
        bits[out_layout.var(v, k - 1)] = static_cast<std::uint8_t>(1 - s);
    }
    return Assignment(out_layout, std::move(bits));
}

double cut_weight(const Graph& g, std::span<const int> partition) {
    if (static_cast<int>(partition.size()) != g.num_vertices()) throw Error("partition vector length differs from vertex count");
    double s = 0.0;
    for (const auto& e : g.edges())
        if (partition[e.u] != partition[e.v]) s += e.w;
    return s;
}

double cut_weight(const Graph& g, const Assignment& a) {
    if (a.n() != g.num_vertices()) throw Error("assignment and graph differ in vertex count");
    const auto p = a.partitions();
    return cut_weight(g, p);
}

std::string export_model(const QuboModel& model) {
    std::string out = "# vars=" + std::to_string(model.num_vars()) +
                      " sense=" + (model.sense() == Sense::maximize ? "max" : "min") +
                      " constant=" + format_real(model.constant());
    if (const auto& l = model.layout())
        out += " encoding=" + std::string(encoding_name(l->encoding)) + " n=" + std::to_string(l->n) + " k=" + std::to_string(l->k);
    else
        out += " encoding=none n=0 k=0";
    out += "\n";
    const auto lin = model.linear();
    for (std::size_t i = 0; i < lin.size(); ++i)
        if (lin[i] != 0.0) out += std::to_string(i) + " " + std::to_string(i) + " " + format_real(lin[i]) + "\n";
    for (const auto& t : model.quadratic())
        out += std::to_string(t.i) + " " + std::to_string(t.j) + " " + format_real(t.coeff) + "\n";
    return out;
}

}  // namespace mkc
