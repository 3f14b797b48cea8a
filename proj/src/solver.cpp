#include "gltc/solver.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <ostream>

#include "gltc/indsets.hpp"

namespace gltc {

bool check_witness(const Instance &inst, const Witness &w) {
    if (static_cast<int>(w.labels.size()) != inst.vertex_count())
        return false;
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (!inst.permits(v, w.labels[v]))
            return false;
    const auto &edges = inst.graph().edges();
    for (std::size_t id = 0; id < edges.size(); ++id)
        if (inst.forbids(static_cast<int>(id), std::abs(w.labels[edges[id].first] - w.labels[edges[id].second])))
            return false;
    return true;
}

namespace {

constexpr std::uint64_t kMaxBlockPrefixes = std::uint64_t{1} << 22;

struct Row {
    const Symbol *data;
    std::uint32_t origin;
};

int compare(const Symbol *a, const Symbol *b, std::size_t n) { return n == 0 ? 0 : std::memcmp(a, b, n); }

/// One way to produce a block prefix `a`: the independent-set bits used and
/// every block word of the previous table that ages into `a` under them.
struct PlanEntry {
    std::vector<Symbol> prefix;
    std::vector<std::uint8_t> bits;
    std::uint64_t mask = 0;
    std::vector<std::vector<Symbol>> sources;
};

struct BlockPlan {
    std::size_t offset = 0;
    std::size_t size = 0;
    std::vector<PlanEntry> entries;
    /// some prefix arises under more than one bit pattern (only when tau = 0)
    bool ambiguous = false;
};

/// Cartesian product of per-coordinate choices, first coordinate slowest.
template <typename T>
std::vector<std::vector<T>> product(const std::vector<std::vector<T>> &choices) {
    std::vector<std::vector<T>> out{{}};
    for (const auto &options : choices) {
        std::vector<std::vector<T>> next;
        for (const auto &head : out)
            for (const auto &o : options) {
                next.push_back(head);
                next.back().push_back(o);
            }
        out = std::move(next);
    }
    return out;
}

BlockPlan make_plan(const Block &block, std::size_t offset, int tau, const Instance &ordered, Pruning pruning) {
    const auto s = block.size();
    std::uint64_t all = 1;
    for (std::size_t i = 0; i < s; ++i) {
        all *= static_cast<std::uint64_t>(tau) + 2;
        if (all > kMaxBlockPrefixes)
            throw ResourceLimitExceeded("block of " + std::to_string(s) + " vertices has too many prefixes to plan");
    }
    BlockPlan plan;
    plan.offset = offset;
    plan.size = s;
    const int alphabet = tau + 3;
    for (auto &prefix : feasible_prefixes(block, tau, ordered, pruning)) {
        // per coordinate, the bits that can yield prefix[i] from some symbol
        std::vector<std::vector<std::uint8_t>> bit_choices(s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::uint8_t y = 0; y <= 1; ++y)
                for (int code = 0; code < alphabet; ++code)
                    if (oplus(static_cast<Symbol>(code), y != 0, tau) == prefix[i]) {
                        bit_choices[i].push_back(y);
                        break;
                    }
        auto patterns = product(bit_choices);
        plan.ambiguous = plan.ambiguous || patterns.size() > 1;
        for (auto &bits : patterns) {
            PlanEntry entry;
            entry.prefix = prefix;
            std::vector<std::vector<Symbol>> sources(s);
            for (std::size_t i = 0; i < s; ++i) {
                if (bits[i])
                    entry.mask |= std::uint64_t{1} << i;
                for (int code = 0; code < alphabet; ++code)
                    if (oplus(static_cast<Symbol>(code), bits[i] != 0, tau) == prefix[i])
                        sources[i].push_back(static_cast<Symbol>(code));
            }
            entry.bits = std::move(bits);
            entry.sources = product(sources);
            plan.entries.push_back(std::move(entry));
        }
    }
    return plan;
}

/// Sub-span of `rows` whose symbols at [column, column + word.size()) equal `word`.
std::span<const Row> narrow(std::span<const Row> rows, std::size_t column, std::span<const Symbol> word) {
    const auto len = word.size();
    auto lo = std::partition_point(rows.begin(), rows.end(),
                                   [&](const Row &r) { return compare(r.data + column, word.data(), len) < 0; });
    auto hi = std::partition_point(lo, rows.end(),
                                   [&](const Row &r) { return compare(r.data + column, word.data(), len) == 0; });
    return {lo, hi};
}

/// Sorts flat rows together with their payloads and drops duplicates (first
/// occurrence in sorted order wins).
void sort_rows(std::size_t width, std::vector<Symbol> &flat, std::vector<std::uint32_t> &parent,
               std::vector<std::uint64_t> &labeled, bool dedup) {
    const std::size_t rows = labeled.size();
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const Symbol *base = flat.data();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare(base + a * width, base + b * width, width) < 0;
    });
    std::vector<Symbol> sorted_flat;
    std::vector<std::uint32_t> sorted_parent;
    std::vector<std::uint64_t> sorted_labeled;
    sorted_flat.reserve(flat.size());
    sorted_labeled.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const Symbol *row = base + order[i] * width;
        if (dedup && i > 0 && compare(row, base + order[i - 1] * width, width) == 0)
            continue;
        sorted_flat.insert(sorted_flat.end(), row, row + width);
        if (!parent.empty())
            sorted_parent.push_back(parent[order[i]]);
        sorted_labeled.push_back(labeled[order[i]]);
    }
    flat = std::move(sorted_flat);
    parent = std::move(sorted_parent);
    labeled = std::move(sorted_labeled);
}

} // namespace

struct LevelEngine::Impl {
    Instance ordered;
    std::vector<int> ordering;
    int tau = 0;
    int lambda_max = 0;
    std::size_t n = 0;
    VectorSet independent;
    std::vector<Row> independent_rows;
    std::vector<BlockPlan> plans;
    BarOperator bar;
    bool ambiguous = false;

    static Instance reorder(const Instance &inst, const Partition &partition) {
        if (inst.vertex_count() > kMaxVertices)
            throw std::invalid_argument("instances above " + std::to_string(kMaxVertices) +
                                        " vertices per component are not supported");
        check_partition(inst.graph(), partition);
        return inst.relabel(partition.ordering());
    }

    Impl(const Instance &inst, const Partition &partition, Pruning pruning)
        : ordered(reorder(inst, partition)), ordering(partition.ordering()), bar(ordered) {
        const auto stats = validate(ordered);
        tau = stats.tau;
        lambda_max = stats.lambda_max;
        n = static_cast<std::size_t>(ordered.vertex_count());

        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        independent = enumerate_independent_sets(ordered.graph(), identity);
        for (std::size_t i = 0; i < independent.size(); ++i)
            independent_rows.push_back({independent[i].data(), static_cast<std::uint32_t>(i)});

        std::size_t offset = 0;
        for (const auto &block : partition.blocks()) {
            Block local{{}, block.kind};
            for (std::size_t i = 0; i < block.size(); ++i)
                local.vertices.push_back(static_cast<int>(offset + i));
            plans.push_back(make_plan(local, offset, tau, ordered, pruning));
            ambiguous = ambiguous || plans.back().ambiguous;
            offset += block.size();
        }
    }
};

namespace {

/// The prefix-decomposed recursion: one block per depth, table rows narrowed
/// to those that age into the chosen prefix, independent sets narrowed to
/// the matching bit pattern.
class Recursion {
  public:
    Recursion(const LevelEngine::Impl &engine, std::size_t budget) : engine_(engine), budget_(budget) {
        prefix_.assign(engine.n, symbol(0));
    }

    void run(std::size_t depth, std::span<const Row> table, std::span<const Row> independent, std::uint64_t mask) {
        if (depth == engine_.plans.size()) {
            emit(table.front().origin, mask);
            return;
        }
        const auto &plan = engine_.plans[depth];
        const std::size_t column = plan.offset;
        const std::size_t next_column = column + plan.size;
        std::vector<std::span<const Row>> ranges;
        for (const auto &entry : plan.entries) {
            auto matching_sets = narrow(independent, column, entry.bits);
            if (matching_sets.empty())
                continue;
            ranges.clear();
            for (const auto &source : entry.sources)
                if (auto r = narrow(table, column, source); !r.empty())
                    ranges.push_back(r);
            if (ranges.empty())
                continue;
            std::copy(entry.prefix.begin(), entry.prefix.end(), prefix_.begin() + static_cast<std::ptrdiff_t>(column));
            const auto next_mask = mask | (entry.mask << column);
            if (ranges.size() == 1) {
                run(depth + 1, ranges.front(), matching_sets, next_mask);
                continue;
            }
            // union of the suffixes past this block, smallest origin kept per suffix
            std::vector<Row> merged;
            for (auto r : ranges)
                merged.insert(merged.end(), r.begin(), r.end());
            const std::size_t width = engine_.n - next_column;
            std::sort(merged.begin(), merged.end(), [&](const Row &a, const Row &b) {
                int c = compare(a.data + next_column, b.data + next_column, width);
                return c != 0 ? c < 0 : a.origin < b.origin;
            });
            merged.erase(std::unique(merged.begin(), merged.end(),
                                     [&](const Row &a, const Row &b) {
                                         return compare(a.data + next_column, b.data + next_column, width) == 0;
                                     }),
                         merged.end());
            run(depth + 1, merged, matching_sets, next_mask);
        }
    }

    StepResult finish() {
        if (engine_.ambiguous)
            sort_rows(engine_.n, flat_, parent_, labeled_, true);
        StepResult step;
        step.vectors = engine_.n == 0 ? VectorSet::from_rows(0, {{}}) : VectorSet::adopt_sorted(engine_.n, std::move(flat_));
        step.parent = std::move(parent_);
        step.labeled = std::move(labeled_);
        return step;
    }

  private:
    void emit(std::uint32_t origin, std::uint64_t mask) {
        if (labeled_.size() >= budget_)
            throw ResourceLimitExceeded("vector limit of " + std::to_string(budget_) + " exceeded");
        flat_.insert(flat_.end(), prefix_.begin(), prefix_.end());
        parent_.push_back(origin);
        labeled_.push_back(mask);
    }

    const LevelEngine::Impl &engine_;
    std::size_t budget_;
    std::vector<Symbol> prefix_;
    std::vector<Symbol> flat_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint64_t> labeled_;
};

} // namespace

LevelEngine::LevelEngine(const Instance &inst, const Partition &partition, Pruning pruning)
    : impl_(std::make_unique<Impl>(inst, partition, pruning)) {}
LevelEngine::~LevelEngine() = default;
LevelEngine::LevelEngine(LevelEngine &&) noexcept = default;
LevelEngine &LevelEngine::operator=(LevelEngine &&) noexcept = default;

const Instance &LevelEngine::ordered_instance() const { return impl_->ordered; }
const std::vector<int> &LevelEngine::ordering() const { return impl_->ordering; }
int LevelEngine::tau() const { return impl_->tau; }
int LevelEngine::lambda_max() const { return impl_->lambda_max; }
const VectorSet &LevelEngine::independent_sets() const { return impl_->independent; }
std::size_t LevelEngine::block_count() const { return impl_->plans.size(); }

VectorSet LevelEngine::initial_table() const {
    const auto n = impl_->n;
    if (n == 0)
        return VectorSet::from_rows(0, {{}});
    std::vector<Symbol> row(n);
    for (std::size_t i = 0; i < n; ++i)
        row[i] = impl_->ordered.permits(static_cast<int>(i), 1) ? symbol(0) : kZeroBar;
    return VectorSet::adopt_sorted(n, std::move(row));
}

StepResult LevelEngine::compute_step(const VectorSet &table, std::size_t budget) const {
    Recursion recursion(*impl_, budget);
    if (table.empty())
        return recursion.finish();
    std::vector<Row> rows;
    rows.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        rows.push_back({table[i].data(), static_cast<std::uint32_t>(i)});
    recursion.run(0, rows, impl_->independent_rows, 0);
    return recursion.finish();
}

LevelTable LevelEngine::apply_bar(StepResult step, int k) const {
    LevelTable table;
    table.level = k + 1;
    const auto n = impl_->n;
    if (n == 0) {
        table.vectors = std::move(step.vectors);
        table.parent = std::move(step.parent);
        table.labeled = std::move(step.labeled);
        return table;
    }
    std::vector<Symbol> flat = step.vectors.flat();
    for (std::size_t i = 0; i < step.vectors.size(); ++i)
        impl_->bar.apply(std::span<Symbol>(flat.data() + i * n, n), k);
    // bar is injective, so no duplicates appear; only the order can change
    sort_rows(n, flat, step.parent, step.labeled, false);
    table.vectors = VectorSet::adopt_sorted(n, std::move(flat));
    table.parent = std::move(step.parent);
    table.labeled = std::move(step.labeled);
    return table;
}

VectorSet LevelEngine::bar_all(const VectorSet &reduced, int k) const {
    const auto n = impl_->n;
    if (n == 0)
        return reduced;
    std::vector<Symbol> flat = reduced.flat();
    for (std::size_t i = 0; i < reduced.size(); ++i)
        impl_->bar.apply(std::span<Symbol>(flat.data() + i * n, n), k);
    return VectorSet::from_flat(n, std::move(flat));
}

VectorSet direct_step(const VectorSet &table, const VectorSet &independent, int tau) {
    const auto n = table.width();
    if (n == 0)
        return !table.empty() && !independent.empty() ? VectorSet::from_rows(0, {{}}) : VectorSet(0);
    std::vector<Symbol> flat;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < independent.size(); ++j)
            if (auto r = oplus(table[i], independent[j], tau))
                flat.insert(flat.end(), r->symbols.begin(), r->symbols.end());
    return VectorSet::from_flat(n, std::move(flat));
}

std::vector<int> reconstruct_witness(const std::vector<LevelTable> &tables, std::size_t index) {
    if (tables.empty())
        throw std::logic_error("no level tables to walk");
    std::vector<int> labels(tables.back().vectors.width(), 0);
    for (std::size_t t = tables.size() - 1; t > 0; --t) {
        const auto &table = tables[t];
        if (table.parent.size() != table.vectors.size())
            throw std::logic_error("level " + std::to_string(table.level) + " has no parent links");
        for (std::size_t i = 0; i < labels.size(); ++i)
            if ((table.labeled[index] >> i) & 1U)
                labels[i] = table.level;
        index = table.parent[index];
    }
    return labels;
}

namespace {

std::size_t first_complete(const VectorSet &table) {
    for (std::size_t i = 0; i < table.size(); ++i)
        if (is_complete(table[i]))
            return i;
    return table.size();
}

} // namespace

SolveResult solve(const Instance &inst, const Partition &partition, const SolveOptions &opts) {
    SolveResult result;
    if (validate(inst).has_empty_list())
        return result;

    LabelCompression compression;
    if (opts.gap_compress)
        compression = compress_gaps(inst);
    const Instance &work = opts.gap_compress ? compression.instance : inst;

    LevelEngine engine(work, partition,
                       opts.strengthened_pruning ? Pruning::strengthened : Pruning::equality);
    const int lambda_max = engine.lambda_max();

    std::vector<LevelTable> tables;
    LevelTable current{0, engine.initial_table(), {}, {}};
    std::size_t held = current.vectors.size();
    auto record = [&](const LevelTable &table) {
        result.stats.levels = table.level;
        result.stats.table_sizes.push_back(table.vectors.size());
        result.stats.max_table = std::max(result.stats.max_table, table.vectors.size());
        result.stats.total_vectors += table.vectors.size();
        if (opts.trace)
            *opts.trace << table.level << '\t' << table.vectors.size() << '\t' << result.stats.total_vectors << '\n';
    };
    record(current);

    std::size_t found = first_complete(current.vectors);
    bool complete = found < current.vectors.size();
    for (int k = 1; k <= lambda_max && !(complete && opts.early_exit); ++k) {
        if (held > opts.vector_limit)
            throw ResourceLimitExceeded("vector limit of " + std::to_string(opts.vector_limit) + " exceeded");
        auto step = engine.compute_step(current.vectors, opts.vector_limit - held);
        LevelTable next = engine.apply_bar(std::move(step), k - 1);
        record(next);
        if (opts.store_parents) {
            tables.push_back(std::move(current));
            held += next.vectors.size();
        } else {
            held = next.vectors.size();
        }
        current = std::move(next);
        found = first_complete(current.vectors);
        complete = found < current.vectors.size();
    }
    if (!complete)
        return result;

    result.decision = Decision::yes;
    if (!opts.store_parents)
        return result;
    tables.push_back(std::move(current));
    const auto positions = reconstruct_witness(tables, found);
    Witness witness;
    witness.labels.assign(static_cast<std::size_t>(inst.vertex_count()), 0);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const int label = positions[i];
        witness.labels[engine.ordering()[i]] = opts.gap_compress ? compression.original[label] : label;
    }
    result.witness = std::move(witness);
    return result;
}

SolveResult solve_instance(const Instance &inst, const PartitionChoice &choice, const SolveOptions &opts) {
    SolveResult combined;
    combined.decision = Decision::yes;
    if (validate(inst).has_empty_list()) {
        combined.decision = Decision::no;
        return combined;
    }
    Witness witness;
    witness.labels.assign(static_cast<std::size_t>(inst.vertex_count()), 0);
    bool have_witness = opts.store_parents;
    for (const auto &component : connected_components(inst)) {
        const int tau = validate(component.instance).tau;
        const auto partition = build_partition(component.instance.graph(), choice, tau);
        if (opts.trace)
            *opts.trace << "# component of " << component.vertices.size() << " vertices, partition "
                        << to_string(choice) << '\n';
        auto part = solve(component.instance, partition, opts);
        combined.stats.levels = std::max(combined.stats.levels, part.stats.levels);
        combined.stats.max_table = std::max(combined.stats.max_table, part.stats.max_table);
        combined.stats.total_vectors += part.stats.total_vectors;
        combined.stats.table_sizes.insert(combined.stats.table_sizes.end(), part.stats.table_sizes.begin(),
                                          part.stats.table_sizes.end());
        if (part.decision == Decision::no) {
            combined.decision = Decision::no;
            return combined;
        }
        if (part.witness)
            for (std::size_t i = 0; i < component.vertices.size(); ++i)
                witness.labels[component.vertices[i]] = part.witness->labels[i];
        else
            have_witness = false;
    }
    if (have_witness)
        combined.witness = std::move(witness);
    return combined;
}

} // namespace gltc
