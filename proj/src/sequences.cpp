#include "permeq/sequences.hpp"

#include <map>
#include <mutex>
#include <string>

#include "permeq/errors.hpp"

namespace permeq {

namespace {

BigInt big_factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

BigInt catalan(long n) { return binomial(2 * n, n) / (n + 1); }

BigInt double_factorial_odd(long m) {
    if (m == -1) return 1;
    if (m < 1 || m % 2 == 0)
        throw InvalidArgument("double factorial defined for odd m >= 1 (or m = -1)");
    BigInt f = 1;
    for (long i = 3; i <= m; i += 2) f *= i;
    return f;
}

BigInt linear_recurrence(long n, std::vector<BigInt> init, std::vector<long> lags) {
    // init[i] is the value at index i; recurrence a(n) = sum a(n - lag)
    if (n < static_cast<long>(init.size())) return init[static_cast<size_t>(n)];
    for (long i = static_cast<long>(init.size()); i <= n; ++i) {
        BigInt next = 0;
        for (long lag : lags) next += init[static_cast<size_t>(i - lag)];
        init.push_back(next);
    }
    return init[static_cast<size_t>(n)];
}

BigInt fib(long n) {  // F(1) = F(2) = 1
    if (n < 1) throw InvalidArgument("Fib domain is n >= 1");
    BigInt a = 1, b = 1;  // F(1), F(2)
    for (long i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? a : b;
}

BigInt trib_a000073(long n) {  // T(0)=T(1)=0, T(2)=1
    if (n < 0) throw InvalidArgument("tribonacci domain is n >= 0");
    return linear_recurrence(n, {0, 0, 1}, {1, 2, 3});
}

BigInt involutions(long n) {
    if (n < 0) throw InvalidArgument("Involutions domain is n >= 0");
    BigInt a = 1, b = 1;  // inv(0), inv(1)
    for (long i = 2; i <= n; ++i) {
        BigInt c = b + (i - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

BigInt p5b_adj(long n) {
    if (n < 3) throw InvalidArgument("P5bAdj domain is n >= 3");
    if (n % 2 == 1) {
        const long k = (n - 1) / 2;
        // (3/2) k (k+1) (2k-1)!; k(k+1) is even so this stays integral
        return BigInt(3) * k * (k + 1) / 2 * big_factorial(2 * k - 1);
    }
    const long k = n / 2;
    // (3/2) k (k - 1/3) (2k-2)! = k(3k-1)/2 * (2k-2)!, minus (2k-3)!!
    BigInt main = BigInt(k) * (3 * k - 1);
    if (main % 2 != 0) throw Error("internal: P5bAdj main term not integral");
    main = main / 2 * big_factorial(2 * k - 2);
    return main - double_factorial_odd(2 * k - 3);
}

}  // namespace

BigInt eval(SequenceId id, long n) {
    switch (id) {
        case SequenceId::Catalan:
            if (n < 0) throw InvalidArgument("Catalan domain is n >= 0");
            return catalan(n);
        case SequenceId::Pow2:
            if (n < 1) throw InvalidArgument("Pow2 domain is n >= 1");
            return BigInt(1) << (n - 1);
        case SequenceId::FactorialShift:
            if (n < 1) throw InvalidArgument("FactorialShift domain is n >= 1");
            return big_factorial(n - 1);
        case SequenceId::HalfFactorials:
            if (n < 1) throw InvalidArgument("HalfFactorials domain is n >= 1");
            return big_factorial(n / 2) * big_factorial((n + 1) / 2);
        case SequenceId::CentralBinomialShift:
            if (n < 1) throw InvalidArgument("CentralBinomialShift domain is n >= 1");
            return binomial(n - 1, (n - 1) / 2);
        case SequenceId::P5bAdj:
            return p5b_adj(n);
        case SequenceId::Involutions:
            return involutions(n);
        case SequenceId::Fib:
            return fib(n);
        case SequenceId::A000930:
            if (n < 0) throw InvalidArgument("A000930 domain is n >= 0");
            return linear_recurrence(n, {1, 1, 1}, {1, 3});
        case SequenceId::FibIverson:
            if (n < 1) throw InvalidArgument("FibIverson domain is n >= 1");
            return fib(n + 1) - (n % 2 == 0 ? 1 : 0);
        case SequenceId::TribA000213:
            if (n < 0) throw InvalidArgument("TribA000213 domain is n >= 0");
            return linear_recurrence(n, {1, 1, 1}, {1, 2, 3});
        case SequenceId::TribA000073Iverson:
            if (n < 1) throw InvalidArgument("TribA000073Iverson domain is n >= 1");
            return trib_a000073(n + 2) - (n % 2 == 0 ? 1 : 0);
        case SequenceId::DoubleFactorialOdd:
            return double_factorial_odd(n);
    }
    throw InvalidArgument("unknown sequence id");
}

bool gf_convolution_check(int max_n, int* counterexample) {
    if (max_n < 4) throw InvalidArgument("gf_convolution_check needs max_n >= 4");
    auto A = [](long m) { return eval(SequenceId::CentralBinomialShift, m); };
    for (int m = 4; m <= max_n; m += 2) {  // A_{2n+2} = sum_i c_i A_{2(n-i)+1}
        const long half = (m - 2) / 2;
        BigInt sum = 0;
        for (long i = 0; i <= half; ++i) sum += catalan(i) * A(2 * (half - i) + 1);
        if (sum != A(m)) {
            if (counterexample) *counterexample = m;
            return false;
        }
    }
    for (int m = 5; m <= max_n; m += 2) {  // A_{2n+1} = sum_m b_m c_{n-m}, b_m = A_{2m}
        const long half = (m - 1) / 2;
        BigInt sum = catalan(half);  // b_0 = 1 term
        for (long i = 1; i <= half; ++i) sum += A(2 * i) * catalan(half - i);
        if (sum != A(m)) {
            if (counterexample) *counterexample = m;
            return false;
        }
    }
    return true;
}

namespace {

std::vector<BigInt> seq(std::initializer_list<long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

// Published results-table literals, starting at n = 3.  Merged rows
// ((1)/(2) and (5)/(6)) are entered under both presets.
const std::map<std::pair<std::string, std::string>, std::vector<BigInt>>& classes_table() {
    static const auto* t = new std::map<std::pair<std::string, std::string>,
                                        std::vector<BigInt>>{
        {{"P1", "general"}, seq({5, 14, 42, 132, 429})},
        {{"P2", "general"}, seq({5, 14, 42, 132, 429})},
        {{"P1", "adjacent"}, seq({5, 16, 62, 284, 1507, 9104})},
        {{"P2", "adjacent"}, seq({5, 16, 62, 284, 1507, 9104})},
        {{"P1", "doubly"}, seq({5, 20, 102, 626, 4458, 36144})},
        {{"P2", "doubly"}, seq({5, 20, 102, 626, 4458, 36144})},
        {{"P4", "general"}, seq({5, 10, 3, 1, 1, 1})},
        {{"P4", "adjacent"}, seq({5, 16, 60, 260, 1260, 67442})},
        {{"P4", "doubly"}, seq({5, 20, 102, 626, 4458, 36144})},
        {{"P3", "general"}, seq({4, 8, 16, 32, 64, 128})},
        {{"P3", "adjacent"}, seq({4, 10, 26, 76, 232, 764})},
        {{"P3", "doubly"}, seq({4, 17, 89, 556, 4011, 32843})},
        {{"P5", "general"}, seq({4, 2, 1, 1, 1, 1})},
        {{"P6", "general"}, seq({4, 2, 1, 1, 1, 1})},
        {{"P5", "adjacent"}, seq({4, 8, 14, 27, 68, 159, 496})},
        {{"P6", "adjacent"}, seq({4, 8, 14, 27, 68, 159, 496})},
        {{"P5", "doubly"}, seq({4, 16, 84, 536, 3912, 32256})},
        {{"P6", "doubly"}, seq({4, 16, 84, 536, 3912, 32256})},
        {{"P7", "general"}, seq({3, 2, 1, 1, 1, 1})},
        {{"P7", "adjacent"}, seq({3, 4, 5, 8, 11, 20, 29, 57})},
        {{"P7", "doubly"}, seq({3, 13, 71, 470, 3497})},
    };
    return *t;
}

const std::map<std::pair<std::string, std::string>, std::vector<BigInt>>& identity_table() {
    static const auto* t = new std::map<std::pair<std::string, std::string>,
                                        std::vector<BigInt>>{
        {{"P1", "general"}, seq({2, 6, 24, 120, 720})},
        {{"P2", "general"}, seq({2, 6, 24, 120, 720})},
        {{"P1", "adjacent"}, seq({2, 4, 12, 36, 144, 576, 2880})},
        {{"P2", "adjacent"}, seq({2, 4, 12, 36, 144, 576, 2880})},
        {{"P1", "doubly"}, seq({2, 3, 5, 8, 13, 21, 34, 55})},
        {{"P2", "doubly"}, seq({2, 3, 5, 8, 13, 21, 34, 55})},
        {{"P4", "general"}, seq({2, 4, 24, 720})},
        {{"P4", "adjacent"}, seq({2, 3, 6, 10, 20, 35, 70, 126})},
        {{"P4", "doubly"}, seq({2, 3, 4, 6, 9, 13, 19, 28})},
        {{"P3", "general"}, seq({3, 13, 71, 461})},
        {{"P3", "adjacent"}, seq({3, 7, 35, 135, 945, 5193})},
        {{"P3", "doubly"}, seq({3, 4, 8, 12, 21, 33, 55, 88})},
        {{"P5", "general"}, seq({3, 23, 120, 720})},
        {{"P6", "general"}, seq({3, 23, 120, 720})},
        {{"P5", "adjacent"}, seq({3, 9, 54, 285, 2160, 15825})},
        {{"P6", "adjacent"}, seq({3, 9, 54, 285, 2160, 15825})},
        {{"P5", "doubly"}, seq({3, 5, 9, 17, 31, 57, 105, 193})},
        {{"P6", "doubly"}, seq({3, 5, 9, 17, 31, 57, 105, 193})},
        {{"P7", "general"}, seq({3, 23, 120, 720})},
        {{"P7", "adjacent"}, seq({4, 21, 116, 713, 5030})},
        {{"P7", "doubly"}, seq({4, 6, 13, 23, 44, 80, 149, 273})},
    };
    return *t;
}

}  // namespace

const std::vector<BigInt>& figure1_expected(std::string_view preset, std::string_view mode,
                                            TableKind kind) {
    const auto& table = kind == TableKind::Classes ? classes_table() : identity_table();
    auto it = table.find({std::string(preset), std::string(mode)});
    if (it == table.end())
        throw NoPublishedData("no published data for (" + std::string(preset) + ", " +
                              std::string(mode) + ")");
    return it->second;
}

std::optional<BigInt> formula_value(std::string_view preset, std::string_view mode,
                                    TableKind kind, int n) {
    const bool p12 = preset == "P1" || preset == "P2";
    const bool p56 = preset == "P5" || preset == "P6";
    if (kind == TableKind::Classes) {
        if (p12 && mode == "general") return eval(SequenceId::Catalan, n);
        if (preset == "P3" && mode == "general") return eval(SequenceId::Pow2, n);
        if (preset == "P3" && mode == "adjacent") return eval(SequenceId::Involutions, n);
        return std::nullopt;
    }
    if (p12 && mode == "general") return eval(SequenceId::FactorialShift, n);
    if (p12 && mode == "adjacent") return eval(SequenceId::HalfFactorials, n);
    if (p12 && mode == "doubly") return eval(SequenceId::Fib, n);
    if (preset == "P4" && mode == "adjacent")
        return eval(SequenceId::CentralBinomialShift, n);
    if (preset == "P4" && mode == "doubly") return eval(SequenceId::A000930, n);
    if (preset == "P3" && mode == "doubly") return eval(SequenceId::FibIverson, n);
    if (p56 && mode == "adjacent") return eval(SequenceId::P5bAdj, n);
    if (p56 && mode == "doubly") return eval(SequenceId::TribA000213, n);
    if (preset == "P7" && mode == "doubly")
        return eval(SequenceId::TribA000073Iverson, n);
    return std::nullopt;
}

}  // namespace permeq
