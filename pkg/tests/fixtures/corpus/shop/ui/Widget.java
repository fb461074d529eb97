package shop.ui;

// Expected: WMC 1, DIT 0 (Panel lives outside the model, so the chain
// stops at the boundary), NOC 0, CBO 0, RFC 1, LCOM 0
class Widget extends Panel {
    void draw() {
    }
}
