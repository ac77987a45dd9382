#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    kblocks::fuzz::decomposition_json(data);
});
