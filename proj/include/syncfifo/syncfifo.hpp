#pragma once

#include <syncfifo/error.hpp>
#include <syncfifo/fifo_core.hpp>
#include <syncfifo/prng.hpp>
#include <syncfifo/ref_model.hpp>
#include <syncfifo/report.hpp>
#include <syncfifo/sim_kernel.hpp>
#include <syncfifo/tb/environment.hpp>
#include <syncfifo/waveform.hpp>
