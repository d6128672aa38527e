// Copyright 2026 The oamc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oamc/modes.hpp"

#include <cmath>
#include <sstream>

namespace oamc {

std::string to_string(const Mode &m) {
    std::ostringstream os;
    os << "(oam " << m.oam << ", path " << m.path;
    if (m.pol) {
        os << ", pol " << (*m.pol == Pol::H ? "H" : "V");
    }
    os << ")";
    return os.str();
}

ModeWindow::ModeWindow(std::int64_t lo, std::int64_t hi, int paths, bool pol)
    : oam_lo(lo), oam_hi(hi), n_paths(paths), with_pol(pol) {
    if (lo > hi) {
        throw std::invalid_argument("ModeWindow: oam_lo > oam_hi");
    }
    if (paths < 1) {
        throw std::invalid_argument("ModeWindow: n_paths must be >= 1");
    }
}

std::string to_string(const ModeWindow &w) {
    std::ostringstream os;
    os << "oam " << w.oam_lo << ".." << w.oam_hi << ", " << w.n_paths << " paths" << (w.with_pol ? ", pol" : "");
    return os.str();
}

std::size_t ModeWindow::size() const {
    return static_cast<std::size_t>(oam_count()) * static_cast<std::size_t>(n_paths) * (with_pol ? 2 : 1);
}

bool ModeWindow::contains(const Mode &m) const {
    return m.oam >= oam_lo && m.oam <= oam_hi && m.path >= 0 && m.path < n_paths && m.pol.has_value() == with_pol;
}

std::size_t ModeWindow::index_of(const Mode &m) const {
    if (!contains(m)) {
        throw WindowError("mode " + to_string(m) + " outside window " + to_string(*this));
    }
    std::size_t idx = static_cast<std::size_t>(m.path) * static_cast<std::size_t>(oam_count()) +
                      static_cast<std::size_t>(m.oam - oam_lo);
    if (with_pol) {
        idx = idx * 2 + static_cast<std::size_t>(*m.pol);
    }
    return idx;
}

Mode ModeWindow::mode_at(std::size_t index) const {
    if (index >= size()) {
        throw WindowError("index " + std::to_string(index) + " outside window " + to_string(*this));
    }
    Mode m;
    if (with_pol) {
        m.pol = static_cast<Pol>(index % 2);
        index /= 2;
    }
    const auto count = static_cast<std::size_t>(oam_count());
    m.path = static_cast<int>(index / count);
    m.oam = oam_lo + static_cast<std::int64_t>(index % count);
    return m;
}

std::vector<Mode> ModeWindow::modes() const {
    std::vector<Mode> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(mode_at(i));
    }
    return out;
}

Complex StateVector::amplitude(const Mode &m) const {
    auto it = amps_.find(m);
    return it == amps_.end() ? Complex{} : it->second;
}

void StateVector::add(const Mode &m, Complex amp) {
    if (!window_.contains(m)) {
        throw WindowError("amplitude on " + to_string(m) + " escapes window " + to_string(window_));
    }
    amps_[m] += amp;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &[mode, a] : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void StateVector::prune(double eps) {
    std::erase_if(amps_, [eps](const auto &kv) { return std::abs(kv.second) <= eps; });
}

Eigen::VectorXcd StateVector::dense() const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(window_.size()));
    for (const auto &[mode, a] : amps_) {
        v(static_cast<Eigen::Index>(window_.index_of(mode))) = a;
    }
    return v;
}

StateVector basis_state(const ModeWindow &window, const Mode &mode) {
    StateVector s(window);
    s.add(mode, 1.0);
    return s;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (!(a.window() == b.window())) {
        throw std::invalid_argument("inner: window mismatch (" + to_string(a.window()) + " vs " +
                                    to_string(b.window()) + ")");
    }
    Complex s{};
    for (const auto &[mode, amp] : a.amplitudes()) {
        s += std::conj(amp) * b.amplitude(mode);
    }
    return s;
}

}  // namespace oamc
