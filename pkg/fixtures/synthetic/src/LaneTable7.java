// storage helper for lane records
class LaneTable7
{
    @Capacity(limit=128, grow=2)
    private int slotSize = 5;

    private long trackMask = -1;

    public int packSlot( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + slotSize;
    }

    public long alignTrack( boolean dense, int count )
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
        return packSlot( mask, count ) + mask;
    }

    public int flushAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -2;
        }
        return total;
    }

    public int relay( Visitor tracker, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        tracker.visit( picked, rounds );
        refresh( tracker, true );
        this.slotSize = picked;
        return this.slotSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.slotSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="lane", retries=3)
    public String describe( String label, double ratio )
    {
        double scaled = (double) slotSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
