#include "test_main.hpp"

#include "mutation.hpp"

#include "gepner/saito.hpp"

using namespace gepner;
using namespace gepner::testing;

namespace {

constexpr int order = 5;

const saito::AModel& model()
{
    static const saito::AModel a = saito::a_model(5, order);
    return a;
}

} // namespace

TEST_CASE("Frobenius verifier catches single-entry mutations")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        FrobeniusData f = model().flat;
        auto m = mutate(rng, f, order - 2);
        CAPTURE(m.where);
        CHECK(localized_failure(verify_frobenius_axioms(f, order).certificate));
    }
}

TEST_CASE("pre-Saito verifier catches single-entry mutations")
{
    std::mt19937 rng(12);
    for (int i = 0; i < 10; ++i) {
        PreSaitoData p = model().saito.presaito;
        auto m = mutate(rng, p, order - 2);
        CAPTURE(m.where);
        CHECK(localized_failure(verify_presaito(p, order)));
    }
}

TEST_CASE("primitive form verifier catches single-entry mutations")
{
    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        SeriesVector w = model().saito.omega;
        auto m = mutate(rng, w, order - 1);
        CAPTURE(m.where);
        CHECK(localized_failure(verify_primitive_form(model().saito.presaito, w, order)));
    }
}
