// Copyright 2026 The seqspace authors
//
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

#include "seqspace/index_set.hpp"

#include <algorithm>
#include <limits>

namespace seqspace {

namespace {
constexpr uint64_t kMaxIndex = uint64_t(1) << 62;

uint64_t checked_u64(__int128 v, const char* where) {
  if (v < 1 || v > static_cast<__int128>(kMaxIndex))
    throw SeqspaceError(std::string("IndexSet: index out of range in ") + where);
  return static_cast<uint64_t>(v);
}
}  // namespace

IndexSet IndexSet::arithmetic(uint64_t stride, int64_t offset) {
  if (stride == 0) throw SeqspaceError("IndexSet::arithmetic: zero stride");
  if (static_cast<__int128>(stride) + offset < 1)
    throw SeqspaceError("IndexSet::arithmetic: first element below 1");
  IndexSet s;
  s.kind_ = Kind::ArithmeticProgression;
  s.stride_ = stride;
  s.offset_ = offset;
  return s;
}

IndexSet IndexSet::dyadic_ray_affine(uint32_t level, uint64_t scale, int64_t offset) {
  if (level == 0 || level > 60) throw SeqspaceError("IndexSet::dyadic_ray: bad level");
  if (scale == 0 || scale > (uint64_t(1) << 32))
    throw SeqspaceError("IndexSet::dyadic_ray: bad scale");
  IndexSet s;
  s.kind_ = Kind::DyadicRay;
  s.level_ = level;
  // {scale*2^(level-1)*(2m-1) + offset} = {(scale*2^level)*m + (offset - scale*2^(level-1))}
  const uint64_t half = scale << (level - 1);
  s.stride_ = half << 1;
  s.offset_ = offset - static_cast<int64_t>(half);
  if (static_cast<__int128>(s.stride_) + s.offset_ < 1)
    throw SeqspaceError("IndexSet::dyadic_ray: first element below 1");
  return s;
}

IndexSet IndexSet::explicit_finite(std::vector<uint64_t> sorted_members) {
  for (size_t i = 0; i < sorted_members.size(); ++i) {
    if (sorted_members[i] < 1) throw SeqspaceError("IndexSet: members start at 1");
    if (i > 0 && sorted_members[i] <= sorted_members[i - 1])
      throw SeqspaceError("IndexSet: members must be strictly increasing");
  }
  IndexSet s;
  s.kind_ = Kind::ExplicitFinite;
  s.members_ = std::move(sorted_members);
  return s;
}

IndexSet IndexSet::complement_of(IndexSet inner) {
  if (inner.kind_ == Kind::Complement) return *inner.inner_;
  // A stride-1 progression starting at or below 1 covers all of N; its
  // complement would be empty, breaking the infinite-enumeration contract.
  if (inner.kind_ == Kind::ArithmeticProgression && inner.stride_ == 1 &&
      inner.offset_ <= 0)
    throw SeqspaceError("IndexSet::complement_of: complement would be empty");
  IndexSet s;
  s.kind_ = Kind::Complement;
  s.inner_ = std::make_shared<const IndexSet>(std::move(inner));
  return s;
}

bool IndexSet::infinite() const {
  switch (kind_) {
    case Kind::ArithmeticProgression:
    case Kind::DyadicRay:
    case Kind::Complement:
      return true;  // complement of a proper progression or finite set
    case Kind::ExplicitFinite:
      return false;
  }
  return false;
}

std::optional<uint64_t> IndexSet::finite_size() const {
  if (kind_ == Kind::ExplicitFinite) return members_.size();
  return std::nullopt;
}

bool IndexSet::contains(uint64_t j) const {
  if (j < 1) return false;
  switch (kind_) {
    case Kind::ArithmeticProgression:
    case Kind::DyadicRay: {
      const __int128 t = static_cast<__int128>(j) - offset_;
      return t >= static_cast<__int128>(stride_) && t % stride_ == 0;
    }
    case Kind::ExplicitFinite:
      return std::binary_search(members_.begin(), members_.end(), j);
    case Kind::Complement:
      return !inner_->contains(j);
  }
  return false;
}

uint64_t IndexSet::count_leq(uint64_t j) const {
  if (j < 1) return 0;
  switch (kind_) {
    case Kind::ArithmeticProgression:
    case Kind::DyadicRay: {
      const __int128 t = static_cast<__int128>(j) - offset_;
      if (t < static_cast<__int128>(stride_)) return 0;
      return static_cast<uint64_t>(t / stride_);
    }
    case Kind::ExplicitFinite:
      return static_cast<uint64_t>(
          std::upper_bound(members_.begin(), members_.end(), j) - members_.begin());
    case Kind::Complement:
      return j - inner_->count_leq(j);
  }
  return 0;
}

uint64_t IndexSet::enumerate(uint64_t m) const {
  if (m < 1) throw SeqspaceError("IndexSet::enumerate: positions start at 1");
  switch (kind_) {
    case Kind::ArithmeticProgression:
    case Kind::DyadicRay:
      return checked_u64(static_cast<__int128>(stride_) * m + offset_, "enumerate");
    case Kind::ExplicitFinite:
      if (m > members_.size())
        throw SeqspaceError("IndexSet::enumerate: past the end of a finite set");
      return members_[m - 1];
    case Kind::Complement: {
      // Smallest j with count_leq(j) == m; count increases by one exactly at members.
      uint64_t lo = 1, hi = 2;
      while (count_leq(hi) < m) {
        lo = hi;
        if (hi > kMaxIndex / 2) throw SeqspaceError("IndexSet::enumerate: range exhausted");
        hi *= 2;
      }
      while (lo < hi) {
        const uint64_t mid = lo + (hi - lo) / 2;
        if (count_leq(mid) >= m)
          hi = mid;
        else
          lo = mid + 1;
      }
      return lo;
    }
  }
  throw SeqspaceError("IndexSet::enumerate: bad kind");
}

std::optional<uint64_t> IndexSet::rank(uint64_t j) const {
  if (!contains(j)) return std::nullopt;
  return count_leq(j);
}

std::optional<std::pair<uint64_t, int64_t>> IndexSet::ap_view() const {
  if (kind_ == Kind::ArithmeticProgression || kind_ == Kind::DyadicRay)
    return std::make_pair(stride_, offset_);
  return std::nullopt;
}

uint32_t IndexSet::ray_level() const {
  if (kind_ != Kind::DyadicRay) throw SeqspaceError("IndexSet::ray_level: not a ray");
  return level_;
}

std::string IndexSet::describe() const {
  switch (kind_) {
    case Kind::ArithmeticProgression:
      if (stride_ == 2 && offset_ == -1) return "odds";
      if (stride_ == 2 && offset_ == 0) return "evens";
      return "ap(" + std::to_string(stride_) + "," + std::to_string(offset_) + ")";
    case Kind::DyadicRay: {
      std::string s = "ray(" + std::to_string(level_) + ")";
      // stride/offset already fold any affine map; report it when non-plain
      const uint64_t plain_stride = uint64_t(1) << level_;
      const int64_t plain_offset = -static_cast<int64_t>(uint64_t(1) << (level_ - 1));
      if (stride_ != plain_stride || offset_ != plain_offset)
        s += "@ap(" + std::to_string(stride_) + "," + std::to_string(offset_) + ")";
      return s;
    }
    case Kind::ExplicitFinite: {
      std::string s = "finite[";
      for (size_t i = 0; i < members_.size() && i < 8; ++i) {
        if (i) s += ",";
        s += std::to_string(members_[i]);
      }
      if (members_.size() > 8) s += ",...";
      return s + "]";
    }
    case Kind::Complement:
      return "complement(" + inner_->describe() + ")";
  }
  return "?";
}

}  // namespace seqspace
