#ifndef FREEVL_NORMAL_FORM_HPP
#define FREEVL_NORMAL_FORM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "freevl/expr.hpp"
#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

namespace freevl {

/// Join-of-meets representation: a nonempty set of nonempty generator
/// blocks, denoting the function x |-> max over blocks of (min over the
/// block of <v, x>).
///
/// Canonical storage: vectors within a block sorted lexicographically and
/// deduplicated, blocks likewise. This canonicalization is representational
/// only; deciding that two NormalForms denote the same function is the
/// order module's job (nf_eq).
class NormalForm {
public:
    using Block = std::vector<Vector>;

    /// Canonicalizes on construction. Rejects an empty block list, empty
    /// blocks, and vectors of mixed dimension.
    NormalForm(std::size_t dim, std::vector<Block> blocks);

    /// The constant-zero function, represented as {{0}}.
    static NormalForm zero(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t max_block_size() const;

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.dim_ == b.dim_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t dim_;
    std::vector<Block> blocks_;
};

/// Bottom-up conversion of an expression tree. Meet and Add distribute by
/// cartesian products of block sets, so the result can be exponentially
/// larger than the input; nf_prune offers opt-in relief.
NormalForm normalize(const Expr& e);

/// Pointwise max: the union of both block sets.
NormalForm nf_join(const NormalForm& f, const NormalForm& g);

/// Pointwise min: all pairwise block unions.
NormalForm nf_meet(const NormalForm& f, const NormalForm& g);

/// Pointwise sum: all pairwise blocks of elementwise sums.
NormalForm nf_add(const NormalForm& f, const NormalForm& g);

/// Pointwise product. Negative factors dualize first (-(a v b) = -a ^ -b),
/// which redistributes and may enlarge the representation.
NormalForm nf_scale(const Rational& factor, const NormalForm& f);

/// max over blocks of (min over the block of <v, x>).
Rational nf_eval(const NormalForm& f, const Vector& x);

/// Drops every block whose meet is dominated by the remaining blocks
/// (decided exactly with nf_leq). Semantically a no-op; never returns an
/// empty block list.
NormalForm nf_prune(const NormalForm& f);

/// Serialization: {"dim": n, "blocks": [[["p/q",...],...],...]} with every
/// rational rendered exactly ("p" or "p/q"). Round-trips bit-exactly.
std::string nf_to_json(const NormalForm& f);

/// Inverse of nf_to_json. Throws Error on malformed documents.
NormalForm nf_from_json(const std::string& text);

}  // namespace freevl

#endif  // FREEVL_NORMAL_FORM_HPP
