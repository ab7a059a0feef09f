#pragma once

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"

namespace seqbench {

// Type-erased view of the indexed-sequence contract, used by the C API and
// any code that picks a structure at run time. Hot benchmark loops use the
// concrete classes directly instead.
class Sequence {
public:
  virtual ~Sequence() = default;

  virtual const char* id() const = 0;
  virtual std::size_t size() const = 0;
  virtual Element item(std::size_t idx) const = 0;
  virtual void insert(std::size_t idx, Element v) = 0;
  virtual Element remove(std::size_t idx) = 0;
  virtual void add_first(Element v) = 0;
  virtual void add_last(Element v) = 0;
  virtual Element remove_first() = 0;
  virtual Element remove_last() = 0;
  virtual std::uint64_t footprint_bytes() const = 0;

  virtual void set_instrumented(bool on) = 0;
  virtual const Counters& counters() const = 0;
  virtual void reset_counters() = 0;
  virtual bool validate() const = 0;
};

template <class S>
class SequenceAdapter final : public Sequence {
public:
  template <class... Args>
  explicit SequenceAdapter(Args&&... args) : impl_(std::forward<Args>(args)...) {}

  S& impl() { return impl_; }
  const S& impl() const { return impl_; }

  const char* id() const override { return S::kId; }
  std::size_t size() const override { return impl_.size(); }
  Element item(std::size_t idx) const override { return impl_.item(idx); }
  void insert(std::size_t idx, Element v) override { impl_.insert(idx, v); }
  Element remove(std::size_t idx) override { return impl_.remove(idx); }
  void add_first(Element v) override { impl_.add_first(v); }
  void add_last(Element v) override { impl_.add_last(v); }
  Element remove_first() override { return impl_.remove_first(); }
  Element remove_last() override { return impl_.remove_last(); }
  std::uint64_t footprint_bytes() const override { return impl_.footprint_bytes(); }

  void set_instrumented(bool on) override { impl_.set_instrumented(on); }
  const Counters& counters() const override { return impl_.counters(); }
  void reset_counters() override { impl_.reset_counters(); }
  bool validate() const override { return impl_.validate(); }

private:
  S impl_;
};

// The seven structure ids, in canonical order.
const std::vector<std::string_view>& structure_ids();
bool is_structure_id(std::string_view id);

// Throws config_error for an unknown id or an invalid block capacity.
std::unique_ptr<Sequence> make_sequence(std::string_view id, std::size_t block_capacity = 0);

}  // namespace seqbench
