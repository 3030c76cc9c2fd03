// storage helper for slot records
class SlotStore27
{
    @Capacity(limit=16, grow=2)
    private int slotSize = 8;

    private long trackMask = -1;

    public int splitSlot( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + slotSize;
    }

    public long trimTrack( boolean dense, int count )
    {
        long mask = trackMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int markAll( int[] values, int limit )
    {
        int acc = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            acc = acc + values[i];
        }
        if ( acc < 0 )
        {
            acc = -2;
        }
        return acc;
    }

    public int relay( Visitor probe, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        probe.visit( picked, rounds );
        refresh( probe, true );
        this.slotSize = picked;
        return this.slotSize;
    }

    public void refresh( Visitor probe, boolean dense )
    {
        int mark = dense ? this.slotSize : -1;
        probe.visit( mark, 0 );
        probe.accept( false );
    }

    @Source(kind="slot", retries=2)
    public String describe( String label, double ratio )
    {
        double scaled = (double) slotSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
