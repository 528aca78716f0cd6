#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bcm {

/// Permutation of {1..n}, stored 0-indexed as the image vector.
/// Composition convention: (a*b)(i) = a(b(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img0) : img_(std::move(img0)) { check(); }

    static Perm identity(int n) { return Perm(n); }

    /// Transposition (i j), 1-indexed arguments.
    static Perm transposition(int n, int i, int j) {
        Perm p(n);
        std::swap(p.img_[i - 1], p.img_[j - 1]);
        return p;
    }

    /// From a 1-indexed image array, e.g. {2,1,3}.
    static Perm from_one_indexed(const std::vector<int>& img1) {
        std::vector<int> v(img1.size());
        for (size_t i = 0; i < img1.size(); ++i) v[i] = img1[i] - 1;
        return Perm(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }

    /// Image of i under the permutation, 1-indexed.
    int map1(int i) const { return img_[i - 1] + 1; }
    /// Image of i, 0-indexed.
    int map0(int i) const { return img_[i]; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm operator*(const Perm& b) const {
        if (size() != b.size()) throw std::invalid_argument("perm size mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 0; i < size(); ++i) r.img_[i] = img_[b.img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 0; i < size(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    int sign() const {
        std::vector<bool> seen(img_.size(), false);
        int s = 1;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    std::vector<int> fixed_points1() const {
        std::vector<int> f;
        for (int i = 0; i < size(); ++i)
            if (img_[i] == i) f.push_back(i + 1);
        return f;
    }

    std::vector<int> one_indexed() const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
        return v;
    }

    const std::vector<int>& raw() const { return img_; }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    void check() const {
        std::vector<bool> seen(img_.size(), false);
        for (int x : img_) {
            if (x < 0 || x >= size() || seen[x])
                throw std::invalid_argument("invalid permutation image");
            seen[x] = true;
        }
    }

    std::vector<int> img_;
};

/// All n! permutations in lexicographic order of the image vector.
/// This order also fixes the row/column indexing of every group-indexed matrix.
inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline int perm_index(const std::vector<Perm>& group, const Perm& p) {
    auto it = std::lower_bound(group.begin(), group.end(), p);
    if (it == group.end() || *it != p) throw std::logic_error("permutation not in group list");
    return static_cast<int>(it - group.begin());
}

}  // namespace bcm
