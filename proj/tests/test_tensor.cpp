#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "tensorloc/partition.hpp"
#include "tensorloc/radii.hpp"
#include "tensorloc/tensor.hpp"

using namespace tensorloc;
using namespace tensorloc::testing;

namespace {

IndexTuple one_based(std::initializer_list<int> idx) {
  IndexTuple out;
  for (int v : idx) out.push_back(v - 1);
  return out;
}

}  // namespace

TEST_CASE("symmetric build expands every permutation") {
  const Tensor t = worked_example();
  CHECK(t.entry(one_based({3, 1, 1, 2})) == Scalar(-0.2));
  CHECK(t.entry(one_based({2, 1, 3, 1})) == Scalar(-0.2));
  CHECK(t.entry(one_based({1, 1, 1, 1})) == Scalar(5.0));
  CHECK(t.entry(one_based({1, 1, 3, 3})) == Scalar(0.0));
  CHECK(t.symmetric_flag());
  CHECK(t.check_symmetric(0.0));
}

TEST_CASE("small builds") {
  const std::vector<TensorEntry> eye = {{{0, 0}, 1.0}, {{1, 1}, 1.0}};
  const Tensor m = Tensor::build(2, 2, eye, false);
  CHECK(m == Tensor::build(2, 2, eye, false));
  CHECK(m.entry(std::vector<int>{0, 1}) == Scalar(0.0));
  CHECK(m.nnz() == 2);
  CHECK(m.entry(std::vector<int>{1, 1}) == Scalar(1.0));

  const std::vector<TensorEntry> one = {{{0, 1, 1}, 5.0}};
  const Tensor t = Tensor::build(3, 2, one, true);
  CHECK(t.entry(one_based({2, 1, 2})) == Scalar(5.0));
  CHECK(t.entry(one_based({2, 2, 1})) == Scalar(5.0));
  CHECK(t.entry(one_based({1, 2, 2})) == Scalar(5.0));
  CHECK(t.nnz() == 3);

  const Tensor literal = Tensor::build(3, 2, one, false);
  CHECK(literal.nnz() == 1);
  CHECK(literal.entry(one_based({2, 1, 2})) == Scalar(0.0));
}

TEST_CASE("build errors") {
  const std::vector<TensorEntry> unsorted = {{{0, 2, 1}, 1.0}};
  CHECK_THROWS_AS(Tensor::build(3, 3, unsorted, true), TensorError);
  CHECK_NOTHROW(Tensor::build(3, 3, unsorted, false));

  const std::vector<TensorEntry> dup = {{{0, 1}, 1.0}, {{0, 1}, 2.0}};
  CHECK_THROWS_AS(Tensor::build(2, 2, dup, false), TensorError);
  CHECK_THROWS_AS(Tensor::build(2, 2, dup, true), TensorError);

  const std::vector<TensorEntry> range = {{{0, 3}, 1.0}};
  CHECK_THROWS_AS(Tensor::build(2, 3, range, false), TensorError);
  const std::vector<TensorEntry> negative = {{{-1, 0}, 1.0}};
  CHECK_THROWS_AS(Tensor::build(2, 3, negative, false), TensorError);
  const std::vector<TensorEntry> short_tuple = {{{0}, 1.0}};
  CHECK_THROWS_AS(Tensor::build(2, 3, short_tuple, false), TensorError);

  CHECK_THROWS_AS(Tensor(1, 3), TensorError);
  CHECK_THROWS_AS(Tensor(3, 0), TensorError);
  CHECK_THROWS_AS(worked_example().entry(std::vector<int>{0, 0, 0, 3}), TensorError);
}

TEST_CASE("offsets are row-major") {
  const Tensor t(3, 4);
  const IndexTuple idx{2, 0, 3};
  CHECK(t.offset_of(idx) == 2 * 16 + 0 * 4 + 3);
  CHECK(t.tuple_of(t.offset_of(idx)) == idx);
  CHECK(t.volume() == 64);
  CHECK(t.row_volume() == 16);
}

TEST_CASE("radii of the worked example") {
  const Tensor t = worked_example();
  CHECK(row_radius(t, 0) == doctest::Approx(3.8).epsilon(1e-12));
  CHECK(row_radius(t, 1) == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(row_radius(t, 2) == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(deleted_row_radius(t, 2, 0) == doctest::Approx(3.4).epsilon(1e-12));

  const SubsetPartition part = subset12();
  const SubsetPartition comp = part.swapped();
  CHECK(split_radius(t, 0, comp, SplitBlock::inside) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(split_radius(t, 1, comp, SplitBlock::inside) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(split_radius(t, 2, part, SplitBlock::inside) == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(split_radius(t, 2, part, SplitBlock::outside) == doctest::Approx(1.8).epsilon(1e-12));

  for (int i = 0; i < 3; ++i) {
    CHECK(row_radius(t, i) == doctest::Approx(brute_row_radius(t, i)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(deleted_row_radius(t, 1, 1), TensorError);
  CHECK_THROWS_AS(row_radius(t, 3), TensorError);
}

TEST_CASE("identity radii are zero") {
  const Tensor t = Tensor::identity(4, 3);
  const SubsetPartition part(3, std::vector<int>{1});
  for (int i = 0; i < 3; ++i) {
    CHECK(row_radius(t, i) == 0.0);
    for (int j = 0; j < 3; ++j) {
      if (i != j) CHECK(deleted_row_radius(t, i, j) == 0.0);
    }
    CHECK(split_radius(t, i, part, SplitBlock::inside) == 0.0);
    CHECK(split_radius(t, i, part, SplitBlock::outside) == 0.0);
  }
}

TEST_CASE("single column entry") {
  Tensor t(3, 3);
  t.set(std::vector<int>{1, 2, 2}, Scalar(0.0, -2.5));
  CHECK(row_radius(t, 1) == 2.5);
  CHECK(deleted_row_radius(t, 1, 2) == 0.0);
  CHECK(deleted_row_radius(t, 1, 0) == 2.5);
}

TEST_CASE("dimension one tensors have zero radii") {
  const std::vector<Scalar> d = {Scalar(2.0)};
  const Tensor t = Tensor::diagonal_tensor(3, d);
  CHECK(row_radius(t, 0) == 0.0);
  CHECK_THROWS_AS(SubsetPartition(1, std::vector<int>{0}), TensorError);
}

TEST_CASE("radius properties on random tensors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 2 + (trial / 3) % 3;
    const Tensor t = trial % 2 ? random_symmetric(rng, m, n) : random_dense(rng, m, n, true);
    const RadiiCache cache(t);
    for (int i = 0; i < n; ++i) {
      const double r = row_radius(t, i);
      CHECK(r == doctest::Approx(brute_row_radius(t, i)).epsilon(1e-13));
      CHECK(cache.row(i) == r);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double d = deleted_row_radius(t, i, j);
        CHECK(d >= 0.0);
        CHECK(d == doctest::Approx(r - std::abs(t.row_column(i, j))).epsilon(1e-12));
        CHECK(cache.deleted(i, j) == d);
      }
    }
    for (const auto& part : enumerate_partitions(n)) {
      for (int i = 0; i < n; ++i) {
        const double in = split_radius(t, i, part, SplitBlock::inside);
        const double out = split_radius(t, i, part, SplitBlock::outside);
        CHECK(in + out == doctest::Approx(row_radius(t, i)).epsilon(1e-12));
        CHECK(in == doctest::Approx(brute_split_inside(t, i, part.members())).epsilon(1e-13));
        CHECK(out == doctest::Approx(brute_split_outside(t, i, part.members())).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("symmetric expansion matches multinomial weights") {
  std::mt19937_64 rng(11);
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      const Tensor t = random_symmetric(rng, m, n);
      for (int i = 0; i < n; ++i) {
        // Each sorted representative containing i contributes once for every
        // distinct arrangement of the remaining m-1 indices.
        double expected = 0.0;
        IndexTuple idx(static_cast<std::size_t>(m), 0);
        do {
          if (!std::is_sorted(idx.begin(), idx.end()) || is_diagonal_tuple(idx)) continue;
          auto it = std::find(idx.begin(), idx.end(), i);
          if (it == idx.end()) continue;
          IndexTuple rest(idx.begin(), idx.end());
          rest.erase(rest.begin() + (it - idx.begin()));
          double arrangements = 0.0;
          do {
            arrangements += 1.0;
          } while (std::next_permutation(rest.begin(), rest.end()));
          expected += arrangements * std::abs(t.entry(idx));
        } while (next_tuple(idx, n));
        CHECK(row_radius(t, i) == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("relabeling permutes radii") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 2;
    const Tensor t = random_dense(rng, 3 + trial % 2, n, trial % 2 == 0);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const Tensor p = t.permuted(sigma);
    for (int i = 0; i < n; ++i) {
      const int si = sigma[static_cast<std::size_t>(i)];
      CHECK(row_radius(p, si) == doctest::Approx(row_radius(t, i)).epsilon(1e-12));
      for (const auto& part : enumerate_partitions(n)) {
        std::vector<int> image;
        for (int v : part.members()) image.push_back(sigma[static_cast<std::size_t>(v)]);
        const SubsetPartition moved(n, image);
        CHECK(split_radius(p, si, moved, SplitBlock::inside) ==
              doctest::Approx(split_radius(t, i, part, SplitBlock::inside)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("positive scaling scales radii") {
  std::mt19937_64 rng(5);
  const Tensor t = random_dense(rng, 4, 3, true);
  const double c = 2.75;
  const Tensor s = t.scaled(c);
  const SubsetPartition part(3, std::vector<int>{0, 2});
  for (int i = 0; i < 3; ++i) {
    CHECK(row_radius(s, i) == doctest::Approx(c * row_radius(t, i)).epsilon(1e-13));
    CHECK(split_radius(s, i, part, SplitBlock::outside) ==
          doctest::Approx(c * split_radius(t, i, part, SplitBlock::outside)).epsilon(1e-13));
  }
}

TEST_CASE("partitions") {
  const auto all = enumerate_partitions(3);
  REQUIRE(all.size() == 6);
  CHECK(all[0].to_string() == "{1}");
  CHECK(all[3].to_string() == "{1,2}");
  CHECK(all[5].to_string() == "{2,3}");
  const SubsetPartition p(4, std::vector<int>{2, 0, 2});
  CHECK(p.members() == std::vector<int>{0, 2});
  CHECK(p.complement() == std::vector<int>{1, 3});
  CHECK(p.swapped().swapped() == p);
  CHECK(SubsetPartition::from_mask(4, 0b0101) == p);
  CHECK_THROWS_AS(SubsetPartition(3, std::vector<int>{}), TensorError);
  CHECK_THROWS_AS(SubsetPartition(3, std::vector<int>{0, 1, 2}), TensorError);
  CHECK_THROWS_AS(SubsetPartition(3, std::vector<int>{3}), TensorError);

  int visited = 0;
  const bool stopped = for_each_partition(4, [&](const SubsetPartition& s) {
    ++visited;
    return s.members().size() == 2;
  });
  CHECK(stopped);
  CHECK(visited == 5);
}
