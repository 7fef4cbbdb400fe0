#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::survey::SurveyRow;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(row) = SurveyRow::from_json_line(text) {
        assert_eq!(row.agreement, row.cyclotomic == row.complete_intersection);
        assert_eq!(SurveyRow::from_json_line(&row.to_json_line()).unwrap(), row);
    }
});
