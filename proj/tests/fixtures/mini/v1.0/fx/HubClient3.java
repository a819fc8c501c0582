package fx;

class HubClient3 {
    private final Hub hub = new Hub();

    int run() { return hub.combine(); }
    int runTwice() { return hub.combine() * 2; }
    int idle() { return 0; }
    int busy() { return 1; }
}
