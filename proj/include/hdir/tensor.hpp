#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdir/mem.hpp"
#include "hdir/rng.hpp"

namespace hdir {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a loss/sample goes non-finite during training.
class NumericalError : public Error {
public:
    using Error::Error;
};

enum class DType : std::uint8_t { f32 = 0, f64 = 1 };

inline std::size_t dtype_size(DType dt) { return dt == DType::f32 ? 4 : 8; }
inline const char* dtype_name(DType dt) { return dt == DType::f32 ? "float32" : "float64"; }

using Shape = std::vector<std::int64_t>;

std::string shape_str(const Shape& s);
std::int64_t shape_numel(const Shape& s);

// Instrumented raw storage. All tensor data and grad buffers live here so the
// memtrack counters see every byte the library retains.
class Buffer {
public:
    explicit Buffer(std::size_t bytes) : bytes_(new std::byte[bytes]()), size_(bytes) {
        memtrack::add(size_);
    }
    ~Buffer() { memtrack::sub(size_); }
    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;

    std::byte* data() { return bytes_.get(); }
    const std::byte* data() const { return bytes_.get(); }
    std::size_t size_bytes() const { return size_; }

private:
    std::unique_ptr<std::byte[]> bytes_;
    std::size_t size_;
};

struct TensorNode {
    Shape shape;
    DType dtype = DType::f64;
    std::shared_ptr<Buffer> data;
    bool requires_grad = false;
    std::shared_ptr<Buffer> grad;  // allocated on first accumulation
    std::uint64_t id = 0;
    // Where this value was recorded, if anywhere. Serial 0 means no producer
    // (leaf, or computed with recording off).
    std::uint64_t producer_tape = 0;
    std::int64_t producer_record = -1;
};

// Value-semantics handle onto a TensorNode. Data is immutable after creation
// except for the grad slot (and explicit in-place parameter updates by the
// optimizer, which owns exclusive access at that point).
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, DType dt);
    static Tensor full(Shape shape, double value, DType dt);
    static Tensor from_doubles(Shape shape, std::span<const double> values, DType dt);
    static Tensor randn(Shape shape, Rng& rng, DType dt);
    static Tensor uniform(Shape shape, double lo, double hi, Rng& rng, DType dt);
    static Tensor scalar(double value, DType dt) { return full({1}, value, dt); }

    bool defined() const { return node_ != nullptr; }
    const Shape& shape() const { return node_->shape; }
    std::int64_t numel() const;
    int rank() const { return static_cast<int>(node_->shape.size()); }
    std::int64_t dim(int i) const { return node_->shape[static_cast<std::size_t>(i)]; }
    DType dtype() const { return node_->dtype; }
    std::uint64_t id() const { return node_->id; }

    bool requires_grad() const { return node_->requires_grad; }
    Tensor& set_requires_grad(bool on) {
        node_->requires_grad = on;
        return *this;
    }

    template <typename T>
    std::span<T> data_span() {
        return {reinterpret_cast<T*>(node_->data->data()), static_cast<std::size_t>(numel())};
    }
    template <typename T>
    std::span<const T> data_span() const {
        return {reinterpret_cast<const T*>(node_->data->data()),
                static_cast<std::size_t>(numel())};
    }

    double at(std::int64_t flat_index) const;
    double item() const;
    std::vector<double> to_doubles() const;

    // Grad access. grad() is undefined until something accumulated into it.
    Tensor grad() const;
    void zero_grad();
    void accumulate_grad(const Tensor& delta);

    // Same data buffer, fresh node with no grad history.
    Tensor detach() const;
    // Deep copy of the data (no grad history).
    Tensor clone() const;

    std::shared_ptr<TensorNode> node() const { return node_; }
    static Tensor wrap(std::shared_ptr<TensorNode> node) {
        Tensor t;
        t.node_ = std::move(node);
        return t;
    }

    // Allocates a node + buffer without filling it; ops write into the span.
    static Tensor uninitialized(Shape shape, DType dt);

private:
    std::shared_ptr<TensorNode> node_;
};

bool same_shape(const Tensor& a, const Tensor& b);
void check_same_shape(const char* op, const Tensor& a, const Tensor& b);
void check_same_dtype(const char* op, const Tensor& a, const Tensor& b);
bool all_finite(const Tensor& t);

}  // namespace hdir
