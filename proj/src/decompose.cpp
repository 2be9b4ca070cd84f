#include "polydecomp/decompose.hpp"

#include "polydecomp/errors.hpp"
#include "polydecomp/ratlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace polydecomp {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

RatVector primitive_integer(RatVector v) {
    Integer den = common_denominator(v.begin(), v.end());
    Integer g = 0;
    for (auto &x : v) {
        x *= den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g > 1)
        for (auto &x : v)
            x /= g;
    return v;
}

RatMatrix coordinate_projection(std::size_t n, BlockRange b) {
    RatMatrix e(n, n);
    for (std::size_t k = b.begin; k < b.end; ++k)
        e(k, k) = 1;
    return e;
}

bool conjugates_to_blocks(const IdempotentSet &set, const RatMatrix &P,
                          std::span<const BlockRange> blocks) {
    if (set.eps.size() != blocks.size())
        return false;
    RatMatrix inv;
    try {
        inv = invert(P);
    } catch (const SingularMatrix &) {
        return false;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j)
        if (!(inv * set.eps[j] * P == coordinate_projection(P.rows(), blocks[j])))
            return false;
    return true;
}

void check_blocks(std::span<const BlockRange> blocks, std::size_t n) {
    std::size_t at = 0;
    for (const auto &b : blocks) {
        if (b.begin != at || b.end <= b.begin)
            throw InvalidArgument("blocks must partition the variables contiguously");
        at = b.end;
    }
    if (at != n)
        throw InvalidArgument("blocks do not cover all variables");
}

// Splits already-transformed polynomials. Also used by the verifier.
std::vector<std::vector<Polynomial>> split_by_blocks(std::span<const Polynomial> gs,
                                                     std::span<const BlockRange> blocks) {
    std::vector<std::vector<Polynomial>> out(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (std::size_t i = 0; i < gs.size(); ++i)
            out[j].emplace_back(blocks[j].size());
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (const auto &[m, c] : gs[i].terms()) {
            std::size_t owner = 0;
            if (!m.is_constant()) {
                std::size_t first = m.nvars();
                for (std::size_t v = 0; v < m.nvars(); ++v)
                    if (m[v]) {
                        first = v;
                        break;
                    }
                while (!(blocks[owner].begin <= first && first < blocks[owner].end))
                    ++owner;
                for (std::size_t v = 0; v < m.nvars(); ++v)
                    if (m[v] && (v < blocks[owner].begin || v >= blocks[owner].end))
                        throw MixedMonomial("a monomial involves variables of two blocks");
            }
            std::vector<std::uint32_t> e(m.exponents().begin() + static_cast<std::ptrdiff_t>(blocks[owner].begin),
                                         m.exponents().begin() + static_cast<std::ptrdiff_t>(blocks[owner].end));
            out[owner][i].add_term(Monomial(std::move(e)), c);
        }
    return out;
}

struct Built {
    DecompositionNode node;
    RatMatrix transform;
};

Built build(std::vector<Polynomial> polys, std::vector<std::size_t> indices, std::uint64_t seed,
            int max_tries) {
    const std::size_t k = indices.size();
    Built b;
    b.node.variable_indices = std::move(indices);
    b.transform = RatMatrix::identity(k);
    b.node.local_transform = RatMatrix::identity(k);

    const CenterBasis z = center_basis(polys);
    b.node.center_dim = z.dim();
    IdempotentSet set = k == 1 ? IdempotentSet::trivial(1) : find_idempotents(z, seed, max_tries);
    if (set.is_trivial()) {
        b.node.polys = std::move(polys);
        return b;
    }

    const RatMatrix local = change_of_variables(set);
    const auto blocks = block_ranges(set);
    auto pieces = separate(polys, local, blocks);

    std::vector<RatMatrix> child_transforms;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        std::vector<std::size_t> child_indices(b.node.variable_indices.begin() + static_cast<std::ptrdiff_t>(blocks[j].begin),
                                               b.node.variable_indices.begin() + static_cast<std::ptrdiff_t>(blocks[j].end));
        Built child = build(std::move(pieces[j]), std::move(child_indices), mix_seed(seed, j), max_tries);
        child_transforms.push_back(std::move(child.transform));
        b.node.children.push_back(std::move(child.node));
    }
    b.transform = local * block_diagonal(child_transforms);
    b.node.polys = std::move(polys);
    b.node.idempotents = std::move(set);
    b.node.local_transform = local;
    return b;
}

void collect_leaves(const DecompositionNode &n, std::vector<const DecompositionNode *> &out) {
    if (n.is_leaf()) {
        out.push_back(&n);
        return;
    }
    for (const auto &c : n.children)
        collect_leaves(c, out);
}

void collect_sets(const DecompositionNode &n, std::vector<IdempotentSet> &out) {
    if (n.is_leaf())
        return;
    out.push_back(n.idempotents);
    for (const auto &c : n.children)
        collect_sets(c, out);
}

VerifyOutcome fail(std::string reason) { return {false, std::move(reason)}; }

// Structural and idempotent checks for one node; accumulates the composed
// transform of the subtree into `composed`.
VerifyOutcome verify_node(const DecompositionNode &node, RatMatrix &composed) {
    const std::size_t k = node.variable_indices.size();
    for (std::size_t i = 1; i < k; ++i)
        if (node.variable_indices[i] != node.variable_indices[i - 1] + 1)
            return fail("node variables are not contiguous");
    if (node.is_leaf()) {
        if (!node.local_transform.entries().empty() && !(node.local_transform == RatMatrix::identity(k)))
            return fail("leaf carries a non-identity transform");
        composed = RatMatrix::identity(k);
        return {};
    }
    if (!satisfies_idempotent_identities(node.idempotents) || node.idempotents.n != k)
        return fail("idempotent identities violated");
    if (node.idempotents.size() != node.children.size())
        return fail("child count does not match idempotent count");
    std::vector<BlockRange> blocks;
    std::size_t at = 0;
    const std::size_t base = k ? node.variable_indices.front() : 0;
    for (const auto &c : node.children) {
        if (c.variable_indices.empty() || c.variable_indices.front() != base + at)
            return fail("children do not partition the parent's variables");
        blocks.push_back({at, at + c.variable_indices.size()});
        at += c.variable_indices.size();
    }
    if (at != k)
        return fail("children do not partition the parent's variables");
    if (node.local_transform.rows() != k || node.local_transform.cols() != k)
        return fail("local transform has the wrong shape");
    if (!conjugates_to_blocks(node.idempotents, node.local_transform, blocks))
        return fail("local P⁻¹εP not block diagonal");
    std::vector<RatMatrix> child_transforms;
    for (const auto &c : node.children) {
        RatMatrix t;
        if (auto r = verify_node(c, t); !r)
            return r;
        child_transforms.push_back(std::move(t));
    }
    composed = node.local_transform * block_diagonal(child_transforms);
    return {};
}

} // namespace

std::string describe(Verdict v) {
    switch (v) {
    case Verdict::Decomposed:
        return "decomposed";
    case Verdict::ScalarCenter:
        return "indecomposable (center is scalar)";
    case Verdict::NoSplitFound:
        return "no nontrivial idempotent found";
    }
    return "unknown";
}

Verdict verdict(const DecompositionResult &r) {
    if (!r.tree.is_leaf())
        return Verdict::Decomposed;
    return r.tree.center_dim == 1 ? Verdict::ScalarCenter : Verdict::NoSplitFound;
}

RatMatrix change_of_variables(const IdempotentSet &set) {
    if (set.is_trivial())
        return RatMatrix::identity(set.n);
    std::vector<RatVector> columns;
    for (const auto &e : set.eps)
        for (auto &v : column_space_basis(e))
            columns.push_back(primitive_integer(std::move(v)));
    if (columns.size() != set.n || span_rank(columns) != set.n)
        throw InternalInvariantViolation("idempotent column spaces do not form a basis");
    RatMatrix P = RatMatrix::from_columns(columns, set.n);
    if (!conjugates_to_blocks(set, P, block_ranges(set)))
        throw InternalInvariantViolation("P^-1 e P is not a coordinate block projection");
    return P;
}

std::vector<BlockRange> block_ranges(const IdempotentSet &set) {
    std::vector<BlockRange> blocks;
    std::size_t at = 0;
    for (const auto &e : set.eps) {
        const std::size_t r = rank(e);
        blocks.push_back({at, at + r});
        at += r;
    }
    return blocks;
}

std::vector<std::vector<Polynomial>> separate(std::span<const Polynomial> polys, const RatMatrix &P,
                                              std::span<const BlockRange> blocks) {
    const std::size_t n = P.rows();
    check_blocks(blocks, n);
    std::vector<Polynomial> gs;
    for (const auto &f : polys)
        gs.push_back(substitute_linear(f, P));
    return split_by_blocks(gs, blocks);
}

DecompositionResult decompose_recursive(std::span<const Polynomial> fs, std::uint64_t seed,
                                        int max_tries) {
    if (fs.empty())
        throw EmptyInput("no polynomials to decompose");
    const std::size_t n = fs.front().nvars();
    for (const auto &f : fs)
        if (f.nvars() != n)
            throw DimensionMismatch("polynomials have different variable counts");
    if (n == 0)
        throw InvalidArgument("polynomials must have at least one variable");
    if (max_tries < 1)
        throw InvalidArgument("max_tries must be at least 1");
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), std::size_t{0});

    Built b = build(std::vector<Polynomial>(fs.begin(), fs.end()), std::move(indices), seed, max_tries);
    DecompositionResult r;
    r.P = std::move(b.transform);
    r.tree = std::move(b.node);
    r.seed = seed;
    r.max_tries = max_tries;
    const auto ls = leaves(r.tree);
    r.diagonalizable = std::all_of(ls.begin(), ls.end(),
                                   [](const DecompositionNode *l) { return l->variable_indices.size() == 1; });
    return r;
}

VerifyOutcome verify_decomposition(std::span<const Polynomial> fs, const DecompositionResult &r) {
    if (fs.empty())
        return fail("no input polynomials");
    const std::size_t n = fs.front().nvars();
    if (r.P.rows() != n || r.P.cols() != n)
        return fail("P has the wrong shape");
    if (sgn(determinant(r.P)) == 0)
        return fail("P is singular");
    if (r.tree.variable_indices.size() != n ||
        (n && (r.tree.variable_indices.front() != 0)))
        return fail("root does not cover all variables");

    RatMatrix composed;
    if (auto v = verify_node(r.tree, composed); !v)
        return v;

    if (!r.tree.is_leaf()) {
        std::vector<BlockRange> blocks;
        for (const auto &c : r.tree.children)
            blocks.push_back({c.variable_indices.front(), c.variable_indices.back() + 1});
        for (const auto &e : r.tree.idempotents.eps)
            if (!membership_check(e, fs))
                return fail("idempotent not in the center");
        if (!conjugates_to_blocks(r.tree.idempotents, r.P, blocks))
            return fail("P⁻¹εP not block diagonal");
    }
    if (!(composed == r.P))
        return fail("P does not match the composed level transforms");

    const auto ls = leaves(r.tree);
    std::vector<BlockRange> leaf_blocks;
    for (const auto *l : ls) {
        if (l->polys.size() != fs.size())
            return fail("leaf polynomial count does not match input count");
        leaf_blocks.push_back({l->variable_indices.front(), l->variable_indices.back() + 1});
    }
    std::vector<Polynomial> gs;
    for (const auto &f : fs)
        gs.push_back(substitute_linear(f, r.P));
    std::vector<std::vector<Polynomial>> pieces;
    try {
        pieces = split_by_blocks(gs, leaf_blocks);
    } catch (const MixedMonomial &) {
        return fail("a cross-block monomial survives in f(Py)");
    }
    for (std::size_t j = 0; j < ls.size(); ++j)
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (!(pieces[j][i] == ls[j]->polys[i]))
                return fail("leaf polynomial mismatch at leaf " + std::to_string(j) + ", polynomial " +
                            std::to_string(i));
    const bool all_single = std::all_of(ls.begin(), ls.end(), [](const DecompositionNode *l) {
        return l->variable_indices.size() == 1;
    });
    if (all_single != r.diagonalizable)
        return fail("diagonalizable flag is inconsistent with the leaves");
    return {};
}

std::vector<const DecompositionNode *> leaves(const DecompositionNode &root) {
    std::vector<const DecompositionNode *> out;
    collect_leaves(root, out);
    return out;
}

std::vector<std::size_t> leaf_sizes(const DecompositionNode &root) {
    std::vector<std::size_t> sizes;
    for (const auto *l : leaves(root))
        sizes.push_back(l->variable_indices.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<IdempotentSet> all_idempotent_sets(const DecompositionNode &root) {
    std::vector<IdempotentSet> out;
    collect_sets(root, out);
    return out;
}

Polynomial reassemble(const DecompositionNode &root, std::size_t i, std::size_t n) {
    Polynomial sum(n);
    for (const auto *l : leaves(root))
        sum += embed_variables(l->polys.at(i), n, l->variable_indices);
    return sum;
}

} // namespace polydecomp
