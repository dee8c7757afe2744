#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

namespace rdcalib {

// Complex DFT of one fixed size backed by FFTW. Plans are created once under
// a global planner lock; execution on caller buffers is reentrant, so a
// const Fft can be shared across threads.
class Fft {
 public:
  explicit Fft(int size);
  ~Fft();

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;

  int size() const { return size_; }

  // X[k] = sum_n x[n] exp(-2 pi i k n / N)
  void forward(const std::complex<double>* in, std::complex<double>* out) const;
  // x[n] = sum_k X[k] exp(+2 pi i k n / N)   (unnormalized)
  void backward(const std::complex<double>* in, std::complex<double>* out) const;

 private:
  int size_ = 0;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

// Fourier synthesis dictionary Psi with Psi[n, k] = exp(+2 pi i k n / N),
// i.e. integer tone separation of 1/T on an N-point grid. Psi^-1 = (1/N) F
// and Psi^H = N Psi^-1 where F is the forward DFT.
class FourierDictionary {
 public:
  explicit FourierDictionary(int size) : fft_(size) {}

  int size() const { return fft_.size(); }

  // x = Psi alpha
  Eigen::VectorXcd synthesize(const Eigen::VectorXcd& alpha) const;
  // Re{Psi alpha} for callers that want the signal-domain output
  Eigen::VectorXd synthesize_real(const Eigen::VectorXcd& alpha) const;
  // alpha = Psi^-1 x
  Eigen::VectorXcd analyze(const Eigen::VectorXcd& x) const;
  Eigen::VectorXcd analyze(const Eigen::VectorXd& x) const;
  // Psi^H x (adjoint, no 1/N)
  Eigen::VectorXcd adjoint(const Eigen::VectorXcd& x) const;

 private:
  Fft fft_;
};

}  // namespace rdcalib
