package beacon.net;

public class HealthProbe {

    private final Transport transport;

    public HealthProbe(Transport transport) {
        this.transport = transport;
    }

    public int ping(Endpoint target) {
        // send the probe packet
        int rtt = transport.send(target);
        // fixme rtt can be negative when the clock drifts
        return rtt;
    }

    public void shutdown() {
        transport.close();
        // todo drain pending probes before closing
    }
}
