#ifndef XBRAID_LINSPACE_HPP_
#define XBRAID_LINSPACE_HPP_

// Exact finite-dimensional linear algebra: spaces with labelled bases,
// linear and bilinear maps given by their matrices/structure constants, and
// subspaces kept in reduced row echelon form so that equality is syntactic.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace xbraid {

  template <ExactField F>
  using Vec = std::vector<Scalar<F>>;

  ////////////////////////////////////////////////////////////////////////
  // Vector helpers
  ////////////////////////////////////////////////////////////////////////

  namespace vec {

    template <class S>
    void check_same_size(std::vector<S> const& a, std::vector<S> const& b) {
      if (a.size() != b.size()) {
        throw Error(Errc::dimension_mismatch,
                    "vectors of length " + std::to_string(a.size()) + " and "
                        + std::to_string(b.size()));
      }
    }

    template <class S>
    std::vector<S> add(std::vector<S> a, std::vector<S> const& b) {
      check_same_size(a, b);
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
      }
      return a;
    }

    template <class S>
    std::vector<S> sub(std::vector<S> a, std::vector<S> const& b) {
      check_same_size(a, b);
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
      }
      return a;
    }

    template <class S>
    std::vector<S> neg(std::vector<S> a) {
      for (auto& x : a) {
        x = -x;
      }
      return a;
    }

    template <class S>
    std::vector<S> scale(S const& c, std::vector<S> a) {
      for (auto& x : a) {
        x *= c;
      }
      return a;
    }

    //! y += c * x
    template <class S>
    void axpy(std::vector<S>& y, S const& c, std::vector<S> const& x) {
      check_same_size(y, x);
      if (is_zero(c)) {
        return;
      }
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (!is_zero(x[i])) {
          y[i] += c * x[i];
        }
      }
    }

    template <class S>
    bool is_zero_vec(std::vector<S> const& a) {
      return std::all_of(a.begin(), a.end(), [](S const& x) { return is_zero(x); });
    }

    template <class S>
    std::vector<S> concat(std::vector<S> a, std::vector<S> const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    template <class S>
    std::vector<S> slice(std::vector<S> const& a, std::size_t offset, std::size_t len) {
      return std::vector<S>(a.begin() + offset, a.begin() + offset + len);
    }

    //! Coordinates of u (x) v in the basis b_i (x) b_j, index i * dim(v) + j.
    template <class S>
    std::vector<S> tensor(std::vector<S> const& u, std::vector<S> const& v, S const& zero) {
      std::vector<S> out(u.size() * v.size(), zero);
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (is_zero(u[i])) {
          continue;
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (!is_zero(v[j])) {
            out[i * v.size() + j] = u[i] * v[j];
          }
        }
      }
      return out;
    }

  }  // namespace vec

  ////////////////////////////////////////////////////////////////////////
  // Space
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  class Space {
   public:
    Space(F field, std::vector<std::string> labels)
        : field_(std::move(field)), labels_(std::move(labels)) {
      std::set<std::string> seen;
      for (auto const& l : labels_) {
        if (!seen.insert(l).second) {
          throw Error(Errc::invalid_input, "duplicate basis label '" + l + "'");
        }
      }
    }

    static Space numbered(F field, std::size_t dim, std::string const& prefix) {
      std::vector<std::string> labels;
      for (std::size_t i = 1; i <= dim; ++i) {
        labels.push_back(prefix + std::to_string(i));
      }
      return Space(std::move(field), std::move(labels));
    }

    F const& field() const noexcept {
      return field_;
    }
    std::size_t dim() const noexcept {
      return labels_.size();
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string const& label(std::size_t i) const {
      return labels_.at(i);
    }
    std::optional<std::size_t> index_of(std::string const& label) const {
      auto it = std::find(labels_.begin(), labels_.end(), label);
      if (it == labels_.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - labels_.begin());
    }

    Vec<F> zero() const {
      return Vec<F>(dim(), field_.zero());
    }
    Vec<F> basis_vector(std::size_t i) const {
      Vec<F> v = zero();
      v.at(i)  = field_.one();
      return v;
    }

    //! Same field and dimension; labels are presentation only.
    bool compatible(Space const& other) const {
      return field_ == other.field_ && dim() == other.dim();
    }

    void require_vector(Vec<F> const& v) const {
      if (v.size() != dim()) {
        throw Error(Errc::dimension_mismatch,
                    "vector of length " + std::to_string(v.size()) + " in a space of dimension "
                        + std::to_string(dim()));
      }
    }

    friend bool operator==(Space const&, Space const&) = default;

   private:
    F                        field_;
    std::vector<std::string> labels_;
  };

  template <ExactField F>
  void require_compatible(Space<F> const& a, Space<F> const& b, std::string const& what) {
    if (!(a.field() == b.field())) {
      throw Error(Errc::field_mismatch, what);
    }
    if (a.dim() != b.dim()) {
      throw Error(Errc::dimension_mismatch,
                  what + " (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
  }

  //! Direct sum with the left block first. Labels are kept when the two label
  //! sets are disjoint, otherwise every label gets the matching prefix.
  template <ExactField F>
  Space<F> direct_sum(Space<F> const& a,
                      Space<F> const& b,
                      std::string const& left_prefix  = "1.",
                      std::string const& right_prefix = "2.") {
    if (!(a.field() == b.field())) {
      throw Error(Errc::field_mismatch, "direct sum of spaces over different fields");
    }
    bool clash = false;
    for (auto const& l : a.labels()) {
      if (b.index_of(l)) {
        clash = true;
        break;
      }
    }
    std::vector<std::string> labels;
    for (auto const& l : a.labels()) {
      labels.push_back(clash ? left_prefix + l : l);
    }
    for (auto const& l : b.labels()) {
      labels.push_back(clash ? right_prefix + l : l);
    }
    return Space<F>(a.field(), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Row reduction
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  struct Echelon {
    std::vector<Vec<F>>      rows;    // nonzero rows, reduced, pivot entries 1
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
  };

  //! Reduced row echelon form of the given rows (each of length ncols).
  template <ExactField F>
  Echelon<F> rref(F const& field, std::vector<Vec<F>> rows, std::size_t ncols) {
    Echelon<F>  out;
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
      std::size_t pivot = top;
      while (pivot < rows.size() && is_zero(rows[pivot][col])) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[top], rows[pivot]);
      Scalar<F> inv = field.one() / rows[top][col];
      for (auto& x : rows[top]) {
        x *= inv;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != top && !is_zero(rows[r][col])) {
          Scalar<F> c = -rows[r][col];
          vec::axpy(rows[r], c, rows[top]);
        }
      }
      out.pivots.push_back(col);
      ++top;
    }
    rows.resize(top);
    out.rows = std::move(rows);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // LinMap
  ////////////////////////////////////////////////////////////////////////

  //! Linear map stored by columns: column j is the image of the j-th basis
  //! vector of the domain.
  template <ExactField F>
  class LinMap {
   public:
    LinMap(Space<F> domain, Space<F> codomain, std::vector<Vec<F>> columns)
        : dom_(std::move(domain)), cod_(std::move(codomain)), cols_(std::move(columns)) {
      if (!(dom_.field() == cod_.field())) {
        throw Error(Errc::field_mismatch, "linear map between spaces over different fields");
      }
      if (cols_.size() != dom_.dim()) {
        throw Error(Errc::dimension_mismatch, "linear map needs one column per domain basis vector");
      }
      for (auto const& c : cols_) {
        cod_.require_vector(c);
      }
    }

    template <class Fn>
    static LinMap from_function(Space<F> const& domain, Space<F> const& codomain, Fn&& image_of_basis) {
      std::vector<Vec<F>> cols;
      cols.reserve(domain.dim());
      for (std::size_t j = 0; j < domain.dim(); ++j) {
        cols.push_back(image_of_basis(j));
      }
      return LinMap(domain, codomain, std::move(cols));
    }

    static LinMap identity(Space<F> const& space) {
      return from_function(space, space, [&](std::size_t j) { return space.basis_vector(j); });
    }

    static LinMap zero(Space<F> const& domain, Space<F> const& codomain) {
      return LinMap(domain, codomain, std::vector<Vec<F>>(domain.dim(), codomain.zero()));
    }

    Space<F> const& domain() const noexcept {
      return dom_;
    }
    Space<F> const& codomain() const noexcept {
      return cod_;
    }
    F const& field() const noexcept {
      return dom_.field();
    }
    std::vector<Vec<F>> const& columns() const noexcept {
      return cols_;
    }
    Vec<F> const& column(std::size_t j) const {
      return cols_.at(j);
    }
    Scalar<F> const& entry(std::size_t row, std::size_t col) const {
      return cols_.at(col).at(row);
    }

    Vec<F> operator()(Vec<F> const& v) const {
      dom_.require_vector(v);
      Vec<F> out = cod_.zero();
      for (std::size_t j = 0; j < v.size(); ++j) {
        vec::axpy(out, v[j], cols_[j]);
      }
      return out;
    }

    //! Matrix rows (codomain dim many, each of domain dim length).
    std::vector<Vec<F>> rows() const {
      std::vector<Vec<F>> out(cod_.dim(), dom_.zero());
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        for (std::size_t i = 0; i < cod_.dim(); ++i) {
          out[i][j] = cols_[j][i];
        }
      }
      return out;
    }

    std::size_t rank() const {
      return rref(field(), rows(), dom_.dim()).pivots.size();
    }
    bool is_injective() const {
      return rank() == dom_.dim();
    }
    bool is_surjective() const {
      return rank() == cod_.dim();
    }
    bool is_bijective() const {
      return dom_.dim() == cod_.dim() && is_injective();
    }

    LinMap with_domain(Space<F> domain) const {
      require_compatible(domain, dom_, "relabelled domain");
      return LinMap(std::move(domain), cod_, cols_);
    }
    LinMap with_codomain(Space<F> codomain) const {
      require_compatible(codomain, cod_, "relabelled codomain");
      return LinMap(dom_, std::move(codomain), cols_);
    }

    friend LinMap operator+(LinMap const& a, LinMap const& b) {
      require_same_shape(a, b);
      return from_function(a.dom_, a.cod_, [&](std::size_t j) { return vec::add(a.cols_[j], b.cols_[j]); });
    }
    friend LinMap operator-(LinMap const& a, LinMap const& b) {
      require_same_shape(a, b);
      return from_function(a.dom_, a.cod_, [&](std::size_t j) { return vec::sub(a.cols_[j], b.cols_[j]); });
    }
    friend LinMap operator*(Scalar<F> const& c, LinMap const& a) {
      return from_function(a.dom_, a.cod_, [&](std::size_t j) { return vec::scale(c, a.cols_[j]); });
    }

    //! Equal as matrices between compatible spaces (labels ignored).
    friend bool operator==(LinMap const& a, LinMap const& b) {
      return a.dom_.compatible(b.dom_) && a.cod_.compatible(b.cod_) && a.cols_ == b.cols_;
    }

   private:
    static void require_same_shape(LinMap const& a, LinMap const& b) {
      require_compatible(a.dom_, b.dom_, "domains of summed maps");
      require_compatible(a.cod_, b.cod_, "codomains of summed maps");
    }

    Space<F>            dom_;
    Space<F>            cod_;
    std::vector<Vec<F>> cols_;
  };

  //! g after f.
  template <ExactField F>
  LinMap<F> composite(LinMap<F> const& g, LinMap<F> const& f) {
    require_compatible(f.codomain(), g.domain(), "composition of linear maps");
    return LinMap<F>::from_function(f.domain(), g.codomain(), [&](std::size_t j) { return g(f.column(j)); });
  }

  ////////////////////////////////////////////////////////////////////////
  // BilMap
  ////////////////////////////////////////////////////////////////////////

  //! Bilinear map L x R -> C given by structure constants: the image of the
  //! pair of basis vectors (b_i, b_j) is sum_k c[k][i][j] c_k.
  template <ExactField F>
  class BilMap {
   public:
    BilMap(Space<F> left, Space<F> right, Space<F> codomain, std::vector<Vec<F>> images)
        : left_(std::move(left)),
          right_(std::move(right)),
          cod_(std::move(codomain)),
          images_(std::move(images)) {
      if (!(left_.field() == right_.field()) || !(left_.field() == cod_.field())) {
        throw Error(Errc::field_mismatch, "bilinear map between spaces over different fields");
      }
      if (images_.size() != left_.dim() * right_.dim()) {
        throw Error(Errc::dimension_mismatch, "bilinear map needs one image per basis pair");
      }
      for (auto const& v : images_) {
        cod_.require_vector(v);
      }
    }

    template <class Fn>
    static BilMap from_function(Space<F> const& left,
                                Space<F> const& right,
                                Space<F> const& codomain,
                                Fn&&            image_of_pair) {
      std::vector<Vec<F>> images;
      images.reserve(left.dim() * right.dim());
      for (std::size_t i = 0; i < left.dim(); ++i) {
        for (std::size_t j = 0; j < right.dim(); ++j) {
          images.push_back(image_of_pair(i, j));
        }
      }
      return BilMap(left, right, codomain, std::move(images));
    }

    static BilMap zero(Space<F> const& left, Space<F> const& right, Space<F> const& codomain) {
      return BilMap(left, right, codomain, std::vector<Vec<F>>(left.dim() * right.dim(), codomain.zero()));
    }

    Space<F> const& left() const noexcept {
      return left_;
    }
    Space<F> const& right() const noexcept {
      return right_;
    }
    Space<F> const& codomain() const noexcept {
      return cod_;
    }
    F const& field() const noexcept {
      return cod_.field();
    }

    Vec<F> const& image(std::size_t i, std::size_t j) const {
      return images_.at(i * right_.dim() + j);
    }
    Scalar<F> const& at(std::size_t k, std::size_t i, std::size_t j) const {
      return image(i, j).at(k);
    }

    Vec<F> operator()(Vec<F> const& x, Vec<F> const& y) const {
      left_.require_vector(x);
      right_.require_vector(y);
      Vec<F> out = cod_.zero();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) {
          continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
          if (is_zero(y[j])) {
            continue;
          }
          Scalar<F> c = x[i] * y[j];
          vec::axpy(out, c, images_[i * right_.dim() + j]);
        }
      }
      return out;
    }

    //! (y, x) |-> this(x, y)
    BilMap transpose() const {
      return from_function(right_, left_, cod_, [&](std::size_t i, std::size_t j) { return image(j, i); });
    }

    //! Post-compose with a linear map out of the codomain.
    BilMap then(LinMap<F> const& f) const {
      require_compatible(cod_, f.domain(), "post-composition of bilinear map");
      return from_function(left_, right_, f.codomain(), [&](std::size_t i, std::size_t j) { return f(image(i, j)); });
    }

    BilMap with_spaces(Space<F> left, Space<F> right, Space<F> codomain) const {
      require_compatible(left, left_, "relabelled left space");
      require_compatible(right, right_, "relabelled right space");
      require_compatible(codomain, cod_, "relabelled codomain");
      return BilMap(std::move(left), std::move(right), std::move(codomain), images_);
    }

    friend BilMap operator+(BilMap const& a, BilMap const& b) {
      require_same_shape(a, b);
      return from_function(a.left_, a.right_, a.cod_, [&](std::size_t i, std::size_t j) {
        return vec::add(a.image(i, j), b.image(i, j));
      });
    }
    friend BilMap operator-(BilMap const& a, BilMap const& b) {
      require_same_shape(a, b);
      return from_function(a.left_, a.right_, a.cod_, [&](std::size_t i, std::size_t j) {
        return vec::sub(a.image(i, j), b.image(i, j));
      });
    }
    friend BilMap operator*(Scalar<F> const& c, BilMap const& a) {
      return from_function(a.left_, a.right_, a.cod_, [&](std::size_t i, std::size_t j) {
        return vec::scale(c, a.image(i, j));
      });
    }

    //! Equal structure constants between compatible spaces (labels ignored).
    friend bool operator==(BilMap const& a, BilMap const& b) {
      return a.left_.compatible(b.left_) && a.right_.compatible(b.right_) && a.cod_.compatible(b.cod_)
             && a.images_ == b.images_;
    }

   private:
    static void require_same_shape(BilMap const& a, BilMap const& b) {
      require_compatible(a.left_, b.left_, "left spaces of summed bilinear maps");
      require_compatible(a.right_, b.right_, "right spaces of summed bilinear maps");
      require_compatible(a.cod_, b.cod_, "codomains of summed bilinear maps");
    }

    Space<F>            left_;
    Space<F>            right_;
    Space<F>            cod_;
    std::vector<Vec<F>> images_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subspace
  ////////////////////////////////////////////////////////////////////////

  //! Subspace of an ambient space, stored as the reduced row echelon basis.
  template <ExactField F>
  class Subspace {
   public:
    static Subspace span(Space<F> const& ambient, std::vector<Vec<F>> vectors) {
      for (auto const& v : vectors) {
        ambient.require_vector(v);
      }
      auto e = rref(ambient.field(), std::move(vectors), ambient.dim());
      return Subspace(ambient, std::move(e.rows), std::move(e.pivots));
    }

    static Subspace zero(Space<F> const& ambient) {
      return Subspace(ambient, {}, {});
    }

    static Subspace whole(Space<F> const& ambient) {
      std::vector<Vec<F>>      rows;
      std::vector<std::size_t> pivots;
      for (std::size_t i = 0; i < ambient.dim(); ++i) {
        rows.push_back(ambient.basis_vector(i));
        pivots.push_back(i);
      }
      return Subspace(ambient, std::move(rows), std::move(pivots));
    }

    Space<F> const& ambient() const noexcept {
      return ambient_;
    }
    std::vector<Vec<F>> const& basis() const noexcept {
      return rows_;
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return pivots_;
    }
    std::size_t dim() const noexcept {
      return rows_.size();
    }

    //! v minus its component along the basis, eliminated on pivot columns.
    //! Zero iff v lies in the subspace.
    Vec<F> reduce(Vec<F> v) const {
      ambient_.require_vector(v);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar<F> c = v[pivots_[r]];
        if (!is_zero(c)) {
          vec::axpy(v, Scalar<F>(-c), rows_[r]);
        }
      }
      return v;
    }

    bool contains(Vec<F> const& v) const {
      return vec::is_zero_vec(reduce(v));
    }

    //! Coefficients of v in the echelon basis; these are the pivot entries.
    Vec<F> coordinates(Vec<F> const& v) const {
      if (!contains(v)) {
        throw Error(Errc::not_in_subspace, "vector is not in the subspace");
      }
      Vec<F> out;
      out.reserve(rows_.size());
      for (auto p : pivots_) {
        out.push_back(v[p]);
      }
      return out;
    }

    //! The subspace as a space in its own right; basis labels are the
    //! ambient labels of the pivot columns.
    Space<F> as_space() const {
      std::vector<std::string> labels;
      for (auto p : pivots_) {
        labels.push_back(ambient_.label(p));
      }
      return Space<F>(ambient_.field(), std::move(labels));
    }

    LinMap<F> inclusion() const {
      return LinMap<F>(as_space(), ambient_, rows_);
    }

    friend bool operator==(Subspace const& a, Subspace const& b) {
      return a.ambient_.compatible(b.ambient_) && a.rows_ == b.rows_;
    }

   private:
    Subspace(Space<F> ambient, std::vector<Vec<F>> rows, std::vector<std::size_t> pivots)
        : ambient_(std::move(ambient)), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

    Space<F>                 ambient_;
    std::vector<Vec<F>>      rows_;
    std::vector<std::size_t> pivots_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  Subspace<F> kernel(LinMap<F> const& f) {
    auto const& dom = f.domain();
    auto        e   = rref(f.field(), f.rows(), dom.dim());
    std::vector<bool> is_pivot(dom.dim(), false);
    for (auto p : e.pivots) {
      is_pivot[p] = true;
    }
    std::vector<Vec<F>> generators;
    for (std::size_t free = 0; free < dom.dim(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vec<F> v = dom.zero();
      v[free]  = f.field().one();
      for (std::size_t r = 0; r < e.rows.size(); ++r) {
        v[e.pivots[r]] = -e.rows[r][free];
      }
      generators.push_back(std::move(v));
    }
    return Subspace<F>::span(dom, std::move(generators));
  }

  template <ExactField F>
  Subspace<F> image(LinMap<F> const& f) {
    return Subspace<F>::span(f.codomain(), f.columns());
  }

  template <ExactField F>
  bool in_subspace(Vec<F> const& v, Subspace<F> const& r) {
    return r.contains(v);
  }

  template <ExactField F>
  struct Quotient {
    Space<F>  space;
    LinMap<F> projection;  // ambient -> quotient, kernel exactly the relations
    LinMap<F> section;     // quotient -> ambient, basis j |-> j-th pivot-free basis vector
  };

  //! Quotient by a subspace; the quotient basis is the set of pivot-free
  //! ambient coordinates, so a coset is represented by its reduced vector.
  template <ExactField F>
  Quotient<F> quotient(Space<F> const& ambient, Subspace<F> const& r) {
    require_compatible(ambient, r.ambient(), "quotient by a subspace of another space");
    std::vector<bool> is_pivot(ambient.dim(), false);
    for (auto p : r.pivots()) {
      is_pivot[p] = true;
    }
    std::vector<std::size_t> free;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ambient.dim(); ++i) {
      if (!is_pivot[i]) {
        free.push_back(i);
        labels.push_back(ambient.label(i));
      }
    }
    Space<F> q(ambient.field(), std::move(labels));
    auto     proj = LinMap<F>::from_function(ambient, q, [&](std::size_t j) {
      Vec<F> reduced = r.reduce(ambient.basis_vector(j));
      Vec<F> out;
      out.reserve(free.size());
      for (auto c : free) {
        out.push_back(reduced[c]);
      }
      return out;
    });
    auto     section
        = LinMap<F>::from_function(q, ambient, [&](std::size_t j) { return ambient.basis_vector(free[j]); });
    return Quotient<F>{std::move(q), std::move(proj), std::move(section)};
  }

  //! Block maps of a direct sum A (+) B, A-block first.
  template <ExactField F>
  struct DirectSum {
    Space<F>  space;
    LinMap<F> inject_left;
    LinMap<F> inject_right;
    LinMap<F> project_left;
    LinMap<F> project_right;
  };

  template <ExactField F>
  DirectSum<F> make_direct_sum(Space<F> const& a,
                               Space<F> const& b,
                               std::string const& left_prefix  = "1.",
                               std::string const& right_prefix = "2.") {
    Space<F> s  = direct_sum(a, b, left_prefix, right_prefix);
    auto     il = LinMap<F>::from_function(a, s, [&](std::size_t j) { return s.basis_vector(j); });
    auto     ir = LinMap<F>::from_function(b, s, [&](std::size_t j) { return s.basis_vector(a.dim() + j); });
    auto     pl = LinMap<F>::from_function(s, a, [&](std::size_t j) { return j < a.dim() ? a.basis_vector(j) : a.zero(); });
    auto     pr = LinMap<F>::from_function(s, b, [&](std::size_t j) { return j < a.dim() ? b.zero() : b.basis_vector(j - a.dim()); });
    return DirectSum<F>{s, il, ir, pl, pr};
  }

  //! {(x, y) : t(x) = s(y)} inside domain(t) (+) domain(s).
  template <ExactField F>
  Subspace<F> pullback_space(LinMap<F> const& t, LinMap<F> const& s) {
    require_compatible(t.codomain(), s.codomain(), "pullback of maps with different codomains");
    auto sum  = make_direct_sum(t.domain(), s.domain());
    auto diff = composite(t, sum.project_left) - composite(s, sum.project_right);
    return kernel(diff);
  }

}  // namespace xbraid

#endif  // XBRAID_LINSPACE_HPP_
