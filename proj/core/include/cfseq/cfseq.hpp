#pragma once

#include "cfseq/asymptotics.hpp"
#include "cfseq/bfile.hpp"
#include "cfseq/bigint.hpp"
#include "cfseq/continued_fraction.hpp"
#include "cfseq/diophantine.hpp"
#include "cfseq/errors.hpp"
#include "cfseq/high_prec.hpp"
#include "cfseq/oeis.hpp"
#include "cfseq/rational.hpp"
#include "cfseq/recurrence.hpp"
#include "cfseq/serialize.hpp"
#include "cfseq/theorem.hpp"
