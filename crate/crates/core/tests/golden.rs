//! Replays the command corpus in `tests/golden/commands.txt` and compares the
//! rendered transcript byte for byte. Set `UPDATE_GOLDEN=1` to rewrite it.

mod common;

#[test]
fn transcript_is_unchanged() {
    let got = common::render_golden();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(common::golden_path(), &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(common::golden_path())
        .expect("transcript present; run with UPDATE_GOLDEN=1 to create it");
    assert!(got == want, "transcript differs:\n{got}");
}
