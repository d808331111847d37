#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace hammock {

template <class T>
class Multiset {
public:
    using Counts = std::map<T, long long>;

    Multiset() = default;
    Multiset(std::initializer_list<T> xs) {
        for (auto &x : xs) add(x);
    }

    void add(const T &x, long long k = 1) {
        if (k == 0) return;
        long long &c = counts_[x];
        c += k;
        if (c < 0) throw std::logic_error("multiset count went negative");
        if (c == 0) counts_.erase(x);
    }
    void remove(const T &x, long long k = 1) { add(x, -k); }

    long long count(const T &x) const {
        auto it = counts_.find(x);
        return it == counts_.end() ? 0 : it->second;
    }
    long long size() const {
        long long s = 0;
        for (auto &[x, c] : counts_) s += c;
        return s;
    }
    bool empty() const { return counts_.empty(); }
    const Counts &counts() const { return counts_; }

    bool contains(const Multiset &o) const {
        for (auto &[x, c] : o.counts_)
            if (count(x) < c) return false;
        return true;
    }

    Multiset &operator+=(const Multiset &o) {
        for (auto &[x, c] : o.counts_) add(x, c);
        return *this;
    }
    Multiset &operator-=(const Multiset &o) {
        for (auto &[x, c] : o.counts_) remove(x, c);
        return *this;
    }
    friend Multiset operator+(Multiset a, const Multiset &b) { return a += b; }
    friend Multiset operator-(Multiset a, const Multiset &b) { return a -= b; }
    friend bool operator==(const Multiset &a, const Multiset &b) { return a.counts_ == b.counts_; }
    friend bool operator<(const Multiset &a, const Multiset &b) { return a.counts_ < b.counts_; }

    std::vector<T> elements() const {
        std::vector<T> r;
        for (auto &[x, c] : counts_)
            for (long long i = 0; i < c; ++i) r.push_back(x);
        return r;
    }

private:
    Counts counts_;
};

}  // namespace hammock
